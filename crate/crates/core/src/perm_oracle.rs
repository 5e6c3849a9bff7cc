//! Brute-force ground truth for the class `A(n, n-k)` and its prefix
//! components `B(n, n-k)(i)`, plus the insertion map that advances `n`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::exact_arith::falling_factorial;
use crate::kernel_algebra::ComponentVector;
use crate::report::CheckEntry;
use crate::{Error, ExactInt, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for &a in &entries {
            let idx = (a as usize).wrapping_sub(1);
            if idx >= n || seen[idx] {
                return Err(Error::domain(format!(
                    "{entries:?} is not a permutation of 1..={n}"
                )));
            }
            seen[idx] = true;
        }
        Ok(Permutation(entries))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }
}

/// Digit string for `n <= 9`, comma-separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.0.iter().join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let entries: Result<Vec<u32>> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
                })
                .collect()
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("{c:?} is not a digit")))
                })
                .collect()
        };
        Permutation::new(entries?)
    }
}

/// `(n, k)` with `n >= 2k`.
///
/// `n = 0` is admitted only together with `k = 0`, where the class is the
/// single empty permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProblemSize {
    n: usize,
    k: usize,
}

impl ProblemSize {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 2 * k {
            return Err(Error::domain(format!("n ≥ 2k violated (n={n}, k={k})")));
        }
        Ok(ProblemSize { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Length of the increasing prefix, `n - k`.
    pub fn prefix_len(&self) -> usize {
        self.n - self.k
    }

    /// Number of candidates the generator inspects: `binom(n,k) * k!`.
    pub fn candidates(&self) -> ExactInt {
        falling_factorial(self.n as u64, self.k as u64).expect("k <= n")
    }
}

/// Length of the longest strictly increasing subsequence (patience sorting).
pub fn lis_length(seq: &[u32]) -> usize {
    let mut tails: Vec<u32> = Vec::with_capacity(seq.len());
    for &a in seq {
        let pos = tails.partition_point(|&t| t < a);
        if pos == tails.len() {
            tails.push(a);
        } else {
            tails[pos] = a;
        }
    }
    tails.len()
}

pub fn is_member(mu: &Permutation, size: ProblemSize) -> bool {
    let a = mu.entries();
    a.len() == size.n
        && a[..size.prefix_len()].windows(2).all(|w| w[0] < w[1])
        && lis_length(a) <= size.prefix_len()
}

/// Members of the class whose first entry is `first` (or all members), in
/// lexicographic order.
///
/// Walks sorted prefix sets in lexicographic order and, for each, the
/// arrangements of the complementary values in lexicographic order; the
/// concatenation order is then lexicographic on whole sequences.
fn generate(size: ProblemSize, first: Option<u32>) -> Vec<Permutation> {
    let n = size.n as u32;
    let m = size.prefix_len();
    if m == 0 {
        // only n = k = 0 reaches here
        return vec![Permutation(Vec::new())];
    }
    let prefixes: Vec<Vec<u32>> = (1..=n)
        .combinations(m)
        .filter(|p| first.is_none_or(|f| p[0] == f))
        .collect();
    prefixes
        .par_iter()
        .flat_map_iter(|prefix| {
            let suffix: Vec<u32> = (1..=n).filter(|v| prefix.binary_search(v).is_err()).collect();
            let k = suffix.len();
            suffix.into_iter().permutations(k).filter_map(move |tail| {
                let mut seq = Vec::with_capacity(n as usize);
                seq.extend_from_slice(prefix);
                seq.extend(tail);
                (lis_length(&seq) <= m).then_some(Permutation(seq))
            })
        })
        .collect()
}

pub fn enumerate_a(size: ProblemSize) -> Vec<Permutation> {
    generate(size, None)
}

/// Members with first entry `i`; empty for `i > k + 1`.
pub fn enumerate_b(size: ProblemSize, i: usize) -> Result<Vec<Permutation>> {
    if i < 1 || i > size.n {
        return Err(Error::domain(format!(
            "prefix i={i} outside 1..={}",
            size.n
        )));
    }
    if i > size.k + 1 {
        return Ok(Vec::new());
    }
    Ok(generate(size, Some(i as u32)))
}

/// `[#B(1), ..., #B(k+1)]` by direct counting.
///
/// For `n = 0` the empty permutation is the single member and is counted in
/// the one component.
pub fn oracle_components(size: ProblemSize) -> ComponentVector {
    components_of(size.k, &enumerate_a(size))
}

fn components_of(k: usize, members: &[Permutation]) -> ComponentVector {
    let mut counts = vec![0u64; k + 1];
    for mu in members {
        let i = mu.first().unwrap_or(1) as usize;
        assert!(i <= k + 1, "member {mu} has first entry beyond k+1");
        counts[i - 1] += 1;
    }
    ComponentVector::new(k, counts.into_iter().map(BigInt::from).collect())
}

/// `i` followed by `mu` with every entry `>= i` shifted up by one.
pub fn sigma_insert(mu: &Permutation, i: u32) -> Result<Permutation> {
    let r = mu
        .first()
        .ok_or_else(|| Error::domain("cannot insert into the empty permutation"))?;
    if i < 1 || i > r {
        return Err(Error::domain(format!(
            "insertion target i={i} must satisfy 1 <= i <= r={r}"
        )));
    }
    let mut out = Vec::with_capacity(mu.len() + 1);
    out.push(i);
    out.extend(mu.entries().iter().map(|&a| if a >= i { a + 1 } else { a }));
    Ok(Permutation(out))
}

/// Checks that for every target prefix `i`, the images of `B_n(r)` for
/// `r = i..=k+1` are disjoint and together make up exactly `B_{n+1}(i)`.
pub fn verify_sigma_bijection(size: ProblemSize) -> CheckEntry {
    let (n, k) = (size.n, size.k);
    let params = [("k", k as i64), ("n", n as i64)];
    let next = ProblemSize::new(n + 1, k).expect("n+1 >= 2k");
    let outcome = (|| -> std::result::Result<(), String> {
        if n == 0 {
            return Err("the insertion map needs a nonempty source".to_string());
        }
        let source = enumerate_a(size);
        let target = enumerate_a(next);
        for i in 1..=(k as u32 + 1) {
            let mut images = HashSet::new();
            for mu in source.iter().filter(|mu| mu.first().unwrap() >= i) {
                let r = mu.first().unwrap();
                let img = sigma_insert(mu, i).map_err(|e| e.to_string())?;
                if img.entries()[1] != r + 1 {
                    return Err(format!("image {img} of {mu} has second entry != {}", r + 1));
                }
                if !is_member(&img, next) {
                    return Err(format!("image {img} of {mu} is not in A({}, {})", n + 1, n + 1 - k));
                }
                if !images.insert(img.clone()) {
                    return Err(format!("image {img} is hit twice"));
                }
            }
            let expected: HashSet<_> = target.iter().filter(|t| t.first() == Some(i)).cloned().collect();
            if let Some(missing) = expected.difference(&images).min() {
                return Err(format!("B({}, {})({i}) member {missing} has no preimage", n + 1, n + 1 - k));
            }
            if images.len() != expected.len() {
                return Err(format!("image count {} != |B({i})| = {}", images.len(), expected.len()));
            }
        }
        Ok(())
    })();
    CheckEntry::from_outcome("bijection.sigma", &params, outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn sz(n: usize, k: usize) -> ProblemSize {
        ProblemSize::new(n, k).unwrap()
    }

    fn strs(v: &[Permutation]) -> Vec<String> {
        v.iter().map(|m| m.to_string()).collect()
    }

    // exponential scan over all subsets
    fn lis_brute(a: &[u32]) -> usize {
        let n = a.len();
        (0u32..(1 << n))
            .filter(|mask| {
                let picked: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| a[i]).collect();
                picked.windows(2).all(|w| w[0] < w[1])
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn lis_examples() {
        assert_eq!(lis_length(p("1234").entries()), 4);
        assert_eq!(lis_length(p("1432").entries()), 2);
        assert_eq!(lis_length(p("3421").entries()), 2);
        assert_eq!(lis_length(&[]), 0);
        assert_eq!(lis_brute(p("1432").entries()), 2);
        assert_eq!(lis_brute(p("3421").entries()), 2);
    }

    #[test]
    fn lis_matches_brute_force_up_to_8() {
        for n in 0..=8u32 {
            for perm in (1..=n).permutations(n as usize).step_by(7) {
                assert_eq!(lis_length(&perm), lis_brute(&perm), "{perm:?}");
            }
        }
    }

    #[test]
    fn membership_examples() {
        assert!(is_member(&p("1432"), sz(4, 2)));
        assert!(!is_member(&p("1234"), sz(4, 2)));
        assert!(!is_member(&p("2134"), sz(4, 2)));
        assert!(!is_member(&p("123"), sz(4, 2)));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(strs(&enumerate_a(sz(4, 2))), ["1432", "2413", "2431", "3412", "3421"]);
        assert_eq!(strs(&enumerate_a(sz(2, 1))), ["21"]);
        assert_eq!(strs(&enumerate_a(sz(5, 0))), ["12345"]);
        assert_eq!(enumerate_a(sz(0, 0)), vec![Permutation(vec![])]);
    }

    #[test]
    fn enumerate_b_examples() {
        assert_eq!(strs(&enumerate_b(sz(4, 2), 2).unwrap()), ["2413", "2431"]);
        assert_eq!(strs(&enumerate_b(sz(4, 2), 3).unwrap()), ["3412", "3421"]);
        assert!(enumerate_b(sz(4, 2), 4).unwrap().is_empty());
        assert!(enumerate_b(sz(4, 2), 0).is_err());
        assert!(enumerate_b(sz(4, 2), 5).is_err());
    }

    #[test]
    fn b_is_empty_beyond_k_plus_one() {
        for (n, k) in [(6, 2), (7, 3), (8, 1)] {
            let all = enumerate_a(sz(n, k));
            for i in k + 2..=n {
                assert!(all.iter().all(|m| m.first() != Some(i as u32)));
                assert!(enumerate_b(sz(n, k), i).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn component_examples() {
        let c = |n, k| oracle_components(sz(n, k)).to_strings();
        assert_eq!(c(4, 2), ["1", "2", "2"]);
        assert_eq!(c(6, 3), ["14", "15", "12", "6"]);
        assert_eq!(c(2, 1), ["0", "1"]);
        assert_eq!(c(0, 0), ["1"]);
    }

    #[test]
    fn generator_matches_full_scan_up_to_7() {
        for n in 0..=7usize {
            for k in 0..=n / 2 {
                let size = sz(n, k);
                let full: Vec<Permutation> = (1..=n as u32)
                    .permutations(n)
                    .map(Permutation)
                    .filter(|m| is_member(m, size))
                    .collect();
                let fast = enumerate_a(size);
                assert_eq!(fast, full, "n={n} k={k}");
                assert!(fast.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn recursion_and_last_component_oracle_vs_oracle() {
        for k in 0..=3usize {
            for n in (2 * k).max(1)..=9 - k {
                let here = oracle_components(sz(n, k));
                let next = oracle_components(sz(n + 1, k));
                for i in 0..=k {
                    let tail: BigInt = here.counts()[i..].iter().sum();
                    assert_eq!(next.counts()[i], tail, "n={n} k={k} i={}", i + 1);
                }
                assert_eq!(here.counts()[k], crate::exact_arith::factorial(k as u64));
                assert_eq!(here.total(), BigInt::from(enumerate_a(sz(n, k)).len()));
            }
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_insert(&p("2413"), 1).unwrap().to_string(), "13524");
        assert_eq!(sigma_insert(&p("3421"), 3).unwrap().to_string(), "34521");
        assert_eq!(sigma_insert(&p("1432"), 1).unwrap().to_string(), "12543");
        assert!(sigma_insert(&p("2413"), 3).is_err());
        assert!(sigma_insert(&p("2413"), 0).is_err());
    }

    #[test]
    fn sigma_bijection_examples() {
        assert!(verify_sigma_bijection(sz(4, 2)).is_pass());
        assert!(verify_sigma_bijection(sz(2, 1)).is_pass());
        assert!(verify_sigma_bijection(sz(6, 3)).is_pass());
        assert_eq!(enumerate_b(sz(7, 3), 1).unwrap().len(), 47);
        assert!(!verify_sigma_bijection(sz(0, 0)).is_pass());
    }

    #[test]
    fn example_two_four_tables() {
        let b5 = |i| strs(&enumerate_b(sz(5, 2), i).unwrap());
        assert_eq!(b5(1), ["12543", "13524", "13542", "14523", "14532"]);
        assert_eq!(b5(2), ["23514", "23541", "24513", "24531"]);
        assert_eq!(b5(3), ["34512", "34521"]);
    }

    #[test]
    fn display_and_parse() {
        let long = Permutation::new((1..=10).rev().collect()).unwrap();
        assert_eq!(long.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
        assert!("1224".parse::<Permutation>().is_err());
        assert!("1a".parse::<Permutation>().is_err());
        assert!(ProblemSize::new(3, 2).is_err());
    }

    proptest! {
        #[test]
        fn lis_bounds_and_reverse(perm in Just((1..=9u32).collect::<Vec<_>>()).prop_shuffle()) {
            let up = lis_length(&perm);
            let rev: Vec<u32> = perm.iter().rev().copied().collect();
            let down = lis_length(&rev);
            // Erdős–Szekeres
            prop_assert!(up * down >= perm.len());
            prop_assert_eq!(up, lis_brute(&perm));
        }

        #[test]
        fn sigma_lands_in_target(k in 0usize..=3, extra in 0usize..=3, seed in any::<u64>()) {
            let size = sz(2 * k + extra.max(usize::from(k == 0)), k);
            let members = enumerate_a(size);
            let mu = &members[(seed as usize) % members.len()];
            let r = mu.first().unwrap();
            let i = 1 + (seed >> 32) as u32 % r;
            let img = sigma_insert(mu, i).unwrap();
            prop_assert!(is_member(&img, sz(size.n() + 1, k)));
            prop_assert_eq!(img.first(), Some(i));
            prop_assert_eq!(img.entries()[1], r + 1);
        }
    }
}
