//! Exact arithmetic: cyclotomic scalars, polynomials and dense matrices.

mod field;
mod matrix;
mod parse;
mod poly;
mod qlin;
mod scalar;

pub use matrix::Matrix;
pub use parse::{parse_rational, parse_scalar, ParseError};
pub use poly::Poly;
pub use scalar::{Scalar, MAX_SQRT_PRIME};
pub(crate) use scalar::rational_pow;
pub(crate) use field::{cyclotomic_poly, euler_phi};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Characteristic polynomial of a square matrix.
pub fn char_poly(m: &Matrix) -> Result<Poly, ExactError> {
    m.char_poly()
}

/// Jordan partition and conjugator of a nilpotent matrix.
pub fn jordan_data(m: &Matrix) -> Result<(Vec<usize>, Matrix), ExactError> {
    m.jordan_data()
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n1() -> Matrix {
        Matrix::e(4, 2, 3)
    }
    fn n2() -> Matrix {
        &Matrix::e(4, 1, 2) - &Matrix::e(4, 3, 4)
    }
    fn n3() -> Matrix {
        &(&Matrix::e(4, 1, 2) + &Matrix::e(4, 2, 3)) - &Matrix::e(4, 3, 4)
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&Matrix::identity(2)).unwrap(), Poly::from_ints(&[1, -2, 1]));
        assert_eq!(char_poly(&n1()).unwrap(), Poly::from_ints(&[0, 0, 0, 0, 1]));
        let q = num_rational::BigRational::from_integer(5.into());
        let a = Scalar::q_half_power(&q, 1).unwrap();
        let b = Scalar::q_half_power(&q, -1).unwrap();
        let p = char_poly(&Matrix::diag(&[a.clone(), b.clone()])).unwrap();
        assert_eq!(p, Poly::new(vec![Scalar::one(), -(&a + &b), Scalar::one()]));
        assert!(char_poly(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::zeros(3, 3)), 0);
        assert_eq!(rank(&n1()), 1);
        assert_eq!(rank(&n2()), 2);
        assert_eq!(rank(&n3()), 3);
    }

    #[test]
    fn jordan_examples() {
        let (p, g) = jordan_data(&Matrix::zeros(4, 4)).unwrap();
        assert_eq!(p, vec![1, 1, 1, 1]);
        assert!(g.is_identity());
        for (m, want) in [(n1(), vec![2, 1, 1]), (n2(), vec![2, 2]), (n3(), vec![4])] {
            let (p, g) = jordan_data(&m).unwrap();
            assert_eq!(p, want);
            let gi = g.inverse().unwrap();
            assert_eq!(&(&g * &m) * &gi, Matrix::jordan_form(&p));
        }
        assert_eq!(jordan_data(&Matrix::identity(2)), Err(ExactError::NotNilpotent));
    }

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_ints(&[[2, 1], [7, 4]]);
        assert_eq!(m.det().unwrap(), Scalar::one());
        assert!((&m * &m.inverse().unwrap()).is_identity());
        assert!(Matrix::from_ints(&[[1, 2], [2, 4]]).inverse().is_none());
    }

    #[test]
    fn commutant_of_regular_nilpotent_is_polynomials() {
        assert_eq!(Matrix::commutant(&[n3()]).len(), 4);
        assert_eq!(Matrix::commutant(&[Matrix::identity(3)]).len(), 9);
    }
}
