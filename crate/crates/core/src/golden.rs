//! Reference tables: component counts `#B(i)` (rows) for consecutive `n`
//! (columns), and the totals `#A`.

pub struct GoldenTable {
    pub k: usize,
    pub n_from: usize,
    pub components: &'static [&'static [u64]],
    pub totals: &'static [u64],
}

impl GoldenTable {
    pub fn n_to(&self) -> usize {
        self.n_from + self.totals.len() - 1
    }
}

pub const K1: GoldenTable = GoldenTable {
    k: 1,
    n_from: 2,
    components: &[&[0, 1, 2, 3, 4], &[1, 1, 1, 1, 1]],
    totals: &[1, 2, 3, 4, 5],
};

pub const K2: GoldenTable = GoldenTable {
    k: 2,
    n_from: 4,
    components: &[
        &[1, 5, 11, 19, 29, 41],
        &[2, 4, 6, 8, 10, 12],
        &[2, 2, 2, 2, 2, 2],
    ],
    totals: &[5, 11, 19, 29, 41, 55],
};

pub const K3: GoldenTable = GoldenTable {
    k: 3,
    n_from: 6,
    components: &[
        &[14, 47, 104, 191, 314, 479],
        &[15, 33, 57, 87, 123, 165],
        &[12, 18, 24, 30, 36, 42],
        &[6, 6, 6, 6, 6, 6],
    ],
    totals: &[47, 104, 191, 314, 479, 692],
};

pub const ALL: [&GoldenTable; 3] = [&K1, &K2, &K3];

/// The listing of `A(4, 2)` by first entry.
pub const A_4_2: [&[&str]; 3] = [&["1432"], &["2413", "2431"], &["3412", "3421"]];

/// The listing of `A(5, 3)` by first entry.
pub const A_5_3: [&[&str]; 3] = [
    &["12543", "13524", "13542", "14523", "14532"],
    &["23514", "23541", "24513", "24531"],
    &["34512", "34521"],
];
