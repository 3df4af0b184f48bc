//! Small exact linear algebra over the rationals and binomial coefficients.

use crate::exactpoly::Rational;

/// `binom(a, b) = a(a−1)⋯(a−b+1)/b!` for any integer `a`; zero for `b < 0`.
pub fn binom(a: i64, b: i64) -> Rational {
    if b < 0 {
        return Rational::from_integer(0);
    }
    let mut acc = Rational::from_integer(1);
    for r in 0..b {
        acc = &(&acc * &Rational::from_integer(a - r)) / &Rational::from_integer(r + 1);
    }
    acc
}

/// Determinant by Gaussian elimination with exact pivots.
pub fn det(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    let mut m: Vec<Vec<Rational>> = matrix.to_vec();
    let mut sign = 1i64;
    let mut acc = Rational::from_integer(1);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::from_integer(0);
        };
        if p != col {
            m.swap(p, col);
            sign = -sign;
        }
        let pivot = m[col][col].clone();
        acc = &acc * &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pivot;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
    }
    &acc * &Rational::from_integer(sign)
}

/// Rank by fraction-free (Bareiss) elimination; entries are cleared of
/// denominators row by row first, so every intermediate stays integral.
pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Zero};

    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(&x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v)
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), q(10));
        assert_eq!(binom(-1, 3), q(-1));
        assert_eq!(binom(2, 5), q(0));
        assert_eq!(binom(4, -1), q(0));
        assert_eq!(binom(7, 0), q(1));
    }

    #[test]
    fn determinant_and_rank() {
        let m = vec![vec![q(2), q(1)], vec![q(4), q(3)]];
        assert_eq!(det(&m), q(2));
        assert_eq!(rank(&m), 2);
        let s = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        assert_eq!(det(&s), q(0));
        assert_eq!(rank(&s), 2);
        let frac = vec![vec![Rational::new(1, 2), Rational::new(1, 3)], vec![q(3), q(2)]];
        assert_eq!(rank(&frac), 1);
        assert_eq!(det(&[vec![q(0), q(1)], vec![q(1), q(0)]]), q(-1));
    }
}
