//! Scalar backends: exact Gaussian rationals and double-precision complex.
//!
//! Every matrix in this crate is homogeneous in one of two scalar types.
//! [`Exact`] carries a complex number whose real and imaginary parts are
//! arbitrary-precision rationals; all of its arithmetic is exact and every
//! zero test is literal, so tolerances are ignored. [`F64`] carries a
//! `Complex<f64>` and consults a [`TolerancePolicy`] whenever a rank or
//! inertia decision has to be made.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::matrix::{Inertia, Matrix};

/// Thresholds used by the floating-point backend.
///
/// Both tolerances are relative: a singular value is treated as zero when it
/// falls below `rank_tol` times the largest singular value (scaled by the
/// matrix dimension), and an eigenvalue below `inertia_tol` times the largest
/// eigenvalue magnitude counts toward `i_zero`. The exact backend ignores the
/// policy entirely.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TolerancePolicy {
    pub rank_tol: f64,
    pub inertia_tol: f64,
}

impl TolerancePolicy {
    pub fn new(rank_tol: f64, inertia_tol: f64) -> Self {
        assert!(rank_tol >= 0.0 && inertia_tol >= 0.0);
        Self { rank_tol, inertia_tol }
    }

    /// One tolerance for both decisions.
    pub fn uniform(tol: f64) -> Self {
        Self::new(tol, tol)
    }
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        Self::new(1e-12, 1e-12)
    }
}

/// A complex scalar usable as a matrix entry.
///
/// The trait also owns the backend-specific kernel algorithms (rank, inertia,
/// pseudoinverse); generic code calls them through [`Matrix`] methods and
/// never needs to know which backend it is running on.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// True for backends whose arithmetic is exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    /// `num/den`, real.
    fn from_ratio(num: i64, den: i64) -> Self;
    /// `re.0/re.1 + (im.0/im.1) i`.
    fn from_complex_ratio(re: (i64, i64), im: (i64, i64)) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    /// Multiplicative inverse. Callers guarantee the value is a nonzero pivot.
    fn inv(&self) -> Self;

    /// Literal zero test (no tolerance).
    fn is_zero(&self) -> bool;
    /// |x|, approximated for the exact backend. Used for pivot selection and
    /// diagnostics only, never for exact decisions.
    fn magnitude(&self) -> f64;
    /// Sign of the real part: -1, 0, or +1.
    fn re_sign(&self) -> i8;
    /// Backend zero test in a tolerance context: literal on the exact
    /// backend, `|x| <= tol * scale` on the float backend.
    fn tol_is_zero(&self, scale: f64, tol: f64) -> bool;

    // Backend-specific matrix kernels. Preconditions are enforced by the
    // `Matrix` wrappers.
    fn mat_rank(m: &Matrix<Self>, pol: &TolerancePolicy) -> usize;
    fn mat_pinv(m: &Matrix<Self>, pol: &TolerancePolicy) -> Matrix<Self>;
    /// Inertia of a matrix already known to be Hermitian.
    fn mat_inertia(m: &Matrix<Self>, pol: &TolerancePolicy) -> Inertia;
    fn mat_is_hermitian(m: &Matrix<Self>, pol: &TolerancePolicy) -> bool;
}

// ── Exact Gaussian rationals ────────────────────────────────────────

/// A Gaussian rational: `re + im*i` with arbitrary-precision rational parts.
///
/// `BigRational` keeps itself in lowest terms with a positive denominator,
/// which is exactly the storage invariant we need.
#[derive(Clone, PartialEq, Eq)]
pub struct Exact {
    pub re: BigRational,
    pub im: BigRational,
}

impl Exact {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_big_ratio(num: BigInt, den: BigInt) -> Self {
        Self::new(BigRational::new(num, den), BigRational::zero())
    }

    /// |x|^2 as an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Exact comparison of the real part against zero, as a rational.
    pub fn real_part(&self) -> &BigRational {
        &self.re
    }
}

impl fmt::Debug for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", fmt_rat(&self.re))
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", fmt_rat(&self.re), fmt_rat(&-self.im.clone()))
        } else {
            write!(f, "{}+{}i", fmt_rat(&self.re), fmt_rat(&self.im))
        }
    }
}

impl Scalar for Exact {
    const EXACT: bool = true;

    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    fn one() -> Self {
        Self::from_int(1)
    }

    fn from_int(v: i64) -> Self {
        Self::new(BigRational::from(BigInt::from(v)), BigRational::zero())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    fn from_complex_ratio(re: (i64, i64), im: (i64, i64)) -> Self {
        assert!(re.1 != 0 && im.1 != 0, "zero denominator");
        Self::new(
            BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
        )
    }

    fn add(&self, rhs: &Self) -> Self {
        Self::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }

    fn neg(&self) -> Self {
        Self::new(-self.re.clone(), -self.im.clone())
    }

    fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "inverse of zero");
        Self::new(&self.re / &n, -(&self.im / &n))
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn magnitude(&self) -> f64 {
        self.norm_sqr().to_f64().map(f64::sqrt).unwrap_or(f64::INFINITY)
    }

    fn re_sign(&self) -> i8 {
        if self.re.is_zero() {
            0
        } else if self.re.is_positive() {
            1
        } else {
            -1
        }
    }

    fn tol_is_zero(&self, _scale: f64, _tol: f64) -> bool {
        self.is_zero()
    }

    fn mat_rank(m: &Matrix<Self>, _pol: &TolerancePolicy) -> usize {
        crate::matrix::exact_rank(m)
    }

    fn mat_pinv(m: &Matrix<Self>, _pol: &TolerancePolicy) -> Matrix<Self> {
        crate::matrix::exact_pinv(m)
    }

    fn mat_inertia(m: &Matrix<Self>, _pol: &TolerancePolicy) -> Inertia {
        crate::matrix::exact_inertia(m)
    }

    fn mat_is_hermitian(m: &Matrix<Self>, _pol: &TolerancePolicy) -> bool {
        if m.rows() != m.cols() {
            return false;
        }
        for i in 0..m.rows() {
            for j in i..m.cols() {
                if *m.at(i, j) != m.at(j, i).conj() {
                    return false;
                }
            }
        }
        true
    }
}

// ── Double-precision complex ────────────────────────────────────────

/// Complex double-precision scalar.
#[derive(Clone, Copy, PartialEq)]
pub struct F64(pub Complex64);

impl fmt::Debug for F64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for F64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.im == 0.0 {
            write!(f, "{}", self.0.re)
        } else if self.0.im < 0.0 {
            write!(f, "{}-{}i", self.0.re, -self.0.im)
        } else {
            write!(f, "{}+{}i", self.0.re, self.0.im)
        }
    }
}

impl Scalar for F64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        F64(Complex64::new(0.0, 0.0))
    }

    fn one() -> Self {
        F64(Complex64::new(1.0, 0.0))
    }

    fn from_int(v: i64) -> Self {
        F64(Complex64::new(v as f64, 0.0))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        F64(Complex64::new(num as f64 / den as f64, 0.0))
    }

    fn from_complex_ratio(re: (i64, i64), im: (i64, i64)) -> Self {
        assert!(re.1 != 0 && im.1 != 0, "zero denominator");
        F64(Complex64::new(
            re.0 as f64 / re.1 as f64,
            im.0 as f64 / im.1 as f64,
        ))
    }

    fn add(&self, rhs: &Self) -> Self {
        F64(self.0 + rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        F64(self.0 - rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        F64(self.0 * rhs.0)
    }

    fn neg(&self) -> Self {
        F64(-self.0)
    }

    fn conj(&self) -> Self {
        F64(self.0.conj())
    }

    fn inv(&self) -> Self {
        F64(self.0.inv())
    }

    fn is_zero(&self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }

    fn magnitude(&self) -> f64 {
        self.0.norm()
    }

    fn re_sign(&self) -> i8 {
        if self.0.re > 0.0 {
            1
        } else if self.0.re < 0.0 {
            -1
        } else {
            0
        }
    }

    fn tol_is_zero(&self, scale: f64, tol: f64) -> bool {
        self.0.norm() <= tol * scale.max(f64::MIN_POSITIVE)
    }

    fn mat_rank(m: &Matrix<Self>, pol: &TolerancePolicy) -> usize {
        crate::float_kernel::rank(m, pol)
    }

    fn mat_pinv(m: &Matrix<Self>, pol: &TolerancePolicy) -> Matrix<Self> {
        crate::float_kernel::pinv(m, pol)
    }

    fn mat_inertia(m: &Matrix<Self>, pol: &TolerancePolicy) -> Inertia {
        crate::float_kernel::inertia(m, pol)
    }

    fn mat_is_hermitian(m: &Matrix<Self>, pol: &TolerancePolicy) -> bool {
        crate::float_kernel::is_hermitian(m, pol)
    }
}

impl Exact {
    /// Lossy conversion to the float backend.
    pub fn to_f64(&self) -> F64 {
        F64(Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_arithmetic_stays_reduced() {
        let a = Exact::from_ratio(2, 4);
        assert_eq!(a, Exact::from_ratio(1, 2));
        let b = Exact::from_complex_ratio((1, 3), (1, 6));
        let s = a.add(&b);
        assert_eq!(s, Exact::from_complex_ratio((5, 6), (1, 6)));
        let p = b.mul(&b.conj());
        assert!(p.is_real());
        assert_eq!(p, Exact::from_ratio(5, 36)); // (1/3)^2 + (1/6)^2
    }

    #[test]
    fn exact_inverse_is_exact() {
        let x = Exact::from_complex_ratio((3, 5), (-2, 7));
        let y = x.inv();
        assert_eq!(x.mul(&y), Exact::one());
    }

    #[test]
    fn display_round_shapes() {
        assert_eq!(Exact::from_int(3).to_string(), "3");
        assert_eq!(Exact::from_ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(Exact::from_complex_ratio((1, 2), (-1, 3)).to_string(), "1/2-1/3i");
        assert_eq!(Exact::from_complex_ratio((0, 1), (1, 1)).to_string(), "0+1i");
    }
}
