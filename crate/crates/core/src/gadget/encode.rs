use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::prg::Hyperedge;
use crate::word::{bin_index, index_of_block, log2_exact, Word};

/// `k` blocks of `n` bits; block `j` is all ones except a 0 at `i_j`.
pub fn encode_onehot(e: &Hyperedge, n: usize) -> Result<Word> {
    let e = Hyperedge::new(e.vertices().to_vec(), n)?;
    let mut out = Word::empty();
    for &i in e.vertices() {
        out.extend_from(&(1..=n).map(|j| j != i).collect());
    }
    Ok(out)
}

/// Inverse of [`encode_onehot`]; `None` unless every block has exactly one
/// zero and the positions are distinct.
pub fn decode_onehot(z: &Word, n: usize) -> Option<Hyperedge> {
    if n == 0 || !z.len().is_multiple_of(n) {
        return None;
    }
    let vertices = z
        .bits()
        .chunks(n)
        .map(|block| {
            let mut zeros = block.iter().enumerate().filter(|(_, &b)| !b);
            match (zeros.next(), zeros.next()) {
                (Some((j, _)), None) => Some(j + 1),
                _ => None,
            }
        })
        .collect::<Option<Vec<_>>>()?;
    Hyperedge::new(vertices, n).ok()
}

/// Concatenation of `bin(i_j)` for each vertex, `k·log2 n` bits.
pub fn encode_compressed(e: &Hyperedge, n: usize) -> Result<Word> {
    log2_exact(n)?;
    let mut out = Word::empty();
    for &i in e.vertices() {
        out.extend_from(&bin_index(i, n)?);
    }
    Hyperedge::new(e.vertices().to_vec(), n)?;
    Ok(out)
}

/// Indices named by the first `k` blocks of `z` (repeats allowed).
pub fn decode_compressed(z: &Word, n: usize, k: usize) -> Result<Vec<usize>> {
    let bits = log2_exact(n)?;
    if z.len() < k * bits {
        return Err(Error::LengthMismatch { expected: k * bits, actual: z.len() });
    }
    Ok(z.bits()[..k * bits].chunks(bits.max(1)).take(k).map(index_of_block).collect())
}

/// Whether the first `k` blocks name pairwise distinct indices. Bits past
/// `k·log2 n` are ignored.
pub fn is_valid_extended(z: &Word, n: usize, k: usize) -> Result<bool> {
    let indices = decode_compressed(z, n, k)?;
    let mut seen = vec![false; n + 1];
    Ok(indices.into_iter().all(|i| !std::mem::replace(&mut seen[i], true)))
}

/// Probability that `k` uniform indices in `[n]` are pairwise distinct:
/// `n(n-1)...(n-k+1) / n^k`, exactly.
pub fn validity_probability(n: usize, k: usize) -> BigRational {
    let falling: BigInt = (0..k).map(|j| BigInt::from(n as i64 - j as i64)).product();
    let power = BigInt::from(n).pow(k as u32);
    BigRational::new(falling, power)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn edge(v: &[usize], n: usize) -> Hyperedge {
        Hyperedge::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn onehot_examples() {
        assert_eq!(encode_onehot(&edge(&[2], 4), 4).unwrap(), w("1011"));
        assert_eq!(encode_onehot(&edge(&[1, 2], 2), 2).unwrap(), w("0110"));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            let e = Hyperedge::sample(9, 4, &mut rng).unwrap();
            assert_eq!(decode_onehot(&encode_onehot(&e, 9).unwrap(), 9), Some(e));
        }
        assert_eq!(decode_onehot(&w("0011"), 4), None);
    }

    #[test]
    fn compressed_examples() {
        assert_eq!(encode_compressed(&edge(&[1, 8, 3], 8), 8).unwrap(), w("000111010"));
        assert_eq!(encode_compressed(&edge(&[2, 1], 2), 2).unwrap(), w("10"));
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let e = Hyperedge::sample(16, 3, &mut rng).unwrap();
            let z = encode_compressed(&e, 16).unwrap();
            assert_eq!(z.len(), 12);
            assert_eq!(decode_compressed(&z, 16, 3).unwrap(), e.vertices());
        }
        assert!(matches!(encode_compressed(&edge(&[1], 6), 6), Err(Error::NotPowerOfTwo(6))));
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid_extended(&w("0001110101111"), 8, 3).unwrap());
        assert!(!is_valid_extended(&w("000000111"), 8, 3).unwrap());
        assert!(Word::all_of_len(3).all(|z| is_valid_extended(&z, 8, 1).unwrap()));
        assert!(is_valid_extended(&w("0001"), 8, 3).is_err());
    }

    #[test]
    fn validity_probability_examples() {
        assert_eq!(validity_probability(8, 3), BigRational::new(336.into(), 512.into()));
        assert_eq!(validity_probability(8, 1), BigRational::from_integer(1.into()));
        assert_eq!(validity_probability(2, 2), BigRational::new(1.into(), 2.into()));
    }
}
