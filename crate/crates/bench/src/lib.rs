//! Fixtures shared by the criterion benches.

use flagcert::{ParabolicShape, Permutation};

pub fn fl(n: usize) -> ParabolicShape {
    ParabolicShape::complete(n).expect("valid rank")
}

pub fn word(w: &[usize], n: usize) -> Permutation {
    Permutation::from_word(w, n).expect("letters in range")
}
