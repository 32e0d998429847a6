//! Partitions, the `(m, n)`-hook and super semistandard Young tableaux over
//! the signed alphabet `1 < … < m < 1' < … < n'`.

mod letter;
mod partition;
mod tableau;

pub use letter::{Alphabet, Parity, SignedLetter, SignedWord};
pub use partition::{conjugate, hook_partitions, in_hook, partitions_of, Partition};
pub use tableau::{
    count_ssyt, count_standard, count_standard_hook_length, count_standard_recursive,
    enumerate_ssyt, is_valid_ssyt, reading_word, Ssyt,
};
