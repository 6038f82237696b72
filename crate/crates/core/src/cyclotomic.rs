//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! A scalar is a vector of `phi(N)` arbitrary-precision rationals in the power
//! basis `1, zeta, ..., zeta^(phi(N)-1)` reduced modulo the N-th cyclotomic
//! polynomial `Phi_N`. Because `Phi_N` is the minimal polynomial of `zeta_N`,
//! the representation is canonical at a fixed conductor: two scalars of the
//! same conductor are equal iff their coefficient vectors are equal, so every
//! axiom check in the crate is an exact zero test.
//!
//! Scalars of different conductors are coerced to the lcm conductor on demand;
//! the embedding `Q(zeta_N) -> Q(zeta_M)` for `N | M` sends `zeta_N` to
//! `zeta_M^(M/N)` and preserves values, so cross-conductor equality is
//! well-defined.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors from scalar construction and division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// Conductor 0 was requested.
    ZeroConductor,
    /// Division by the zero scalar.
    DivisionByZero,
    /// A coefficient vector of the wrong length was supplied.
    CoeffLength { expected: usize, got: usize },
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::ZeroConductor => write!(f, "conductor must be positive"),
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::CoeffLength { expected, got } => {
                write!(f, "expected {expected} coefficients, got {got}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ScalarError {}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Coefficients (ascending, monic) of the N-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    let mut memo = BTreeMap::new();
    cyclotomic_poly_memo(n, &mut memo)
}

fn cyclotomic_poly_memo(n: u64, memo: &mut BTreeMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    let mut poly = vec![BigInt::zero(); (n + 1) as usize];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly_memo(d, memo);
            poly = int_poly_div_exact(&poly, &phi_d);
        }
    }
    memo.insert(n, poly.clone());
    poly
}

/// Exact division of integer polynomials, `num / den` with `den` monic.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for i in 0..=dd {
                let t = &den[i] * &c;
                rem[k + i] -= t;
            }
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// Shared context for one conductor: the modulus `Phi_N` and precomputed
/// reduction rows for the degrees produced by a product of two reduced scalars.
#[derive(Debug)]
pub struct CycField {
    conductor: u64,
    degree: usize,
    /// `Phi_N`, ascending coefficients, monic, length `degree + 1`.
    modulus: Vec<BigRational>,
    /// `reduction[i]` = coefficients of `x^(degree + i) mod Phi_N`, for
    /// `i` in `0..degree-1` (enough to reduce a schoolbook product).
    reduction: Vec<Vec<BigRational>>,
}

impl CycField {
    /// Field context for `Q(zeta_n)`. Rejects `n = 0`.
    pub fn new(n: u64) -> Result<Arc<CycField>, ScalarError> {
        if n == 0 {
            return Err(ScalarError::ZeroConductor);
        }
        let phi = cyclotomic_polynomial(n);
        let degree = phi.len() - 1;
        let modulus: Vec<BigRational> = phi.into_iter().map(BigRational::from_integer).collect();
        // x^degree mod Phi = -(lower part); each next row is a shift reduced once.
        let mut reduction: Vec<Vec<BigRational>> = Vec::new();
        if degree > 0 {
            let base: Vec<BigRational> = (0..degree).map(|i| -modulus[i].clone()).collect();
            reduction.push(base);
            for i in 1..degree.saturating_sub(1) {
                let prev = &reduction[i - 1];
                let mut row = vec![BigRational::zero(); degree];
                let top = prev[degree - 1].clone();
                for j in 1..degree {
                    row[j] = prev[j - 1].clone();
                }
                if !top.is_zero() {
                    for j in 0..degree {
                        let t = &reduction[0][j] * &top;
                        row[j] += t;
                    }
                }
                reduction.push(row);
            }
        }
        Ok(Arc::new(CycField {
            conductor: n,
            degree,
            modulus,
            reduction,
        }))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Degree of the extension, `phi(N)`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The zero scalar of this field.
    pub fn zero(self: &Arc<Self>) -> CycScalar {
        CycScalar {
            field: Arc::clone(self),
            coeffs: vec![BigRational::zero(); self.degree],
        }
    }

    /// The multiplicative identity.
    pub fn one(self: &Arc<Self>) -> CycScalar {
        self.from_rational(BigRational::one())
    }

    /// Embed a rational number.
    pub fn from_rational(self: &Arc<Self>, q: BigRational) -> CycScalar {
        let mut coeffs = vec![BigRational::zero(); self.degree];
        if self.degree > 0 {
            coeffs[0] = q;
        } else {
            // conductor 1 or 2 still has degree 1; degree 0 cannot happen
            unreachable!("cyclotomic field of degree 0");
        }
        CycScalar {
            field: Arc::clone(self),
            coeffs,
        }
    }

    /// Embed an integer.
    pub fn from_integer(self: &Arc<Self>, n: i64) -> CycScalar {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `zeta_N^k` in canonical form, for any integer `k`.
    pub fn root(self: &Arc<Self>, k: i64) -> CycScalar {
        let n = self.conductor as i64;
        let e = k.rem_euclid(n) as usize;
        let mut poly = vec![BigRational::zero(); e + 1];
        poly[e] = BigRational::one();
        CycScalar {
            field: Arc::clone(self),
            coeffs: self.reduce(poly),
        }
    }

    /// Build a scalar from an explicit coefficient vector (length `phi(N)`).
    pub fn scalar_from_coeffs(
        self: &Arc<Self>,
        coeffs: Vec<BigRational>,
    ) -> Result<CycScalar, ScalarError> {
        if coeffs.len() != self.degree {
            return Err(ScalarError::CoeffLength {
                expected: self.degree,
                got: coeffs.len(),
            });
        }
        Ok(CycScalar {
            field: Arc::clone(self),
            coeffs,
        })
    }

    /// Remainder of an ascending-coefficient polynomial modulo `Phi_N`.
    fn reduce(&self, mut poly: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree;
        while poly.len() > d {
            let top = poly.pop().unwrap();
            let k = poly.len(); // degree of the popped term
            if top.is_zero() {
                continue;
            }
            if k >= d && k - d < self.reduction.len() {
                let row = &self.reduction[k - d];
                for j in 0..d {
                    let t = &row[j] * &top;
                    poly[j] += t;
                }
            } else {
                // long-division step: x^k = x^(k-d) * (x^d - modulus tail)
                for j in 0..d {
                    let t = &self.modulus[j] * &top;
                    poly[k - d + j] -= t;
                }
            }
        }
        poly.resize(d, BigRational::zero());
        poly
    }
}

/// An element of `Q(zeta_N)`. Immutable, exact, canonical per conductor.
#[derive(Clone)]
pub struct CycScalar {
    field: Arc<CycField>,
    coeffs: Vec<BigRational>,
}

impl CycScalar {
    pub fn conductor(&self) -> u64 {
        self.field.conductor
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Rational part if the scalar lies in `Q`, i.e. all higher coefficients vanish.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-express in a field of conductor `M` with `N | M`. Panics if `N ∤ M`;
    /// callers go through [`CycScalar::coerced_pair`] which guarantees it.
    fn promote(&self, target: &Arc<CycField>) -> CycScalar {
        let n = self.field.conductor;
        let m = target.conductor;
        debug_assert!(m % n == 0);
        if n == m {
            return CycScalar {
                field: Arc::clone(target),
                coeffs: self.coeffs.clone(),
            };
        }
        let step = (m / n) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[i * step] = c.clone();
            }
        }
        CycScalar {
            field: Arc::clone(target),
            coeffs: target.reduce(poly),
        }
    }

    /// Coerce two scalars to a common conductor (the lcm).
    pub fn coerced_pair(a: &CycScalar, b: &CycScalar) -> (CycScalar, CycScalar) {
        let (n, m) = (a.field.conductor, b.field.conductor);
        if n == m {
            return (a.clone(), b.clone());
        }
        let l = n.lcm(&m);
        let target = if l == n {
            Arc::clone(&a.field)
        } else if l == m {
            Arc::clone(&b.field)
        } else {
            CycField::new(l).expect("lcm conductor is positive")
        };
        (a.promote(&target), b.promote(&target))
    }

    pub fn add(&self, rhs: &CycScalar) -> CycScalar {
        if self.field.conductor == rhs.field.conductor {
            let coeffs = self
                .coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a + b)
                .collect();
            CycScalar {
                field: Arc::clone(&self.field),
                coeffs,
            }
        } else {
            let (a, b) = CycScalar::coerced_pair(self, rhs);
            a.add(&b)
        }
    }

    pub fn sub(&self, rhs: &CycScalar) -> CycScalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> CycScalar {
        CycScalar {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &CycScalar) -> CycScalar {
        if self.field.conductor != rhs.field.conductor {
            let (a, b) = CycScalar::coerced_pair(self, rhs);
            return a.mul(&b);
        }
        if self.is_zero() || rhs.is_zero() {
            return self.field.zero();
        }
        let d = self.field.degree;
        let mut conv = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        CycScalar {
            field: Arc::clone(&self.field),
            coeffs: self.field.reduce(conv),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Phi_N`; exact, and `a.inv() * a == 1` by construction.
    pub fn inv(&self) -> Result<CycScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // Fast path: a plain rational.
        if let Some(q) = self.as_rational() {
            return Ok(self.field.from_rational(q.recip()));
        }
        let (g, u) = poly_ext_gcd(&self.coeffs, &self.field.modulus);
        // Phi_N is irreducible over Q, so g is a nonzero constant.
        debug_assert!(g.len() == 1 && !g[0].is_zero());
        let ginv = g[0].recip();
        let coeffs = self.field.reduce(u.iter().map(|c| c * &ginv).collect());
        Ok(CycScalar {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    pub fn div(&self, rhs: &CycScalar) -> Result<CycScalar, ScalarError> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Integer power; negative exponents require invertibility.
    pub fn pow(&self, e: i64) -> Result<CycScalar, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Multiplicative order if the scalar is a root of unity, else `None`.
    /// Bounded search up to `2 * conductor`.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        let mut acc = self.clone();
        let bound = 2 * self.field.conductor.max(1);
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }
}

/// Extended gcd of `a` (as coefficient slice) and the monic modulus `m`:
/// returns `(g, u)` with `g = gcd(a, m)` and `u*a ≡ g (mod m)`.
fn poly_ext_gcd(a: &[BigRational], m: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0: Vec<BigRational> = trim(m.to_vec());
    let mut r1: Vec<BigRational> = trim(a.to_vec());
    // Bezout coefficients with respect to `a` only: s0*a ≡ r0, s1*a ≡ r1 (mod m).
    let mut s0: Vec<BigRational> = vec![];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_div_rem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = trim(s);
    }
    (r0, s0)
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

fn poly_div_rem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let den = trim(den.to_vec());
    assert!(!den.is_empty(), "polynomial division by zero");
    let mut rem = trim(num.to_vec());
    if rem.len() < den.len() {
        return (vec![], rem);
    }
    let lead = den.last().unwrap().recip();
    let mut quot = vec![BigRational::zero(); rem.len() - den.len() + 1];
    for k in (0..quot.len()).rev() {
        let idx = k + den.len() - 1;
        if rem.len() <= idx || rem[idx].is_zero() {
            continue;
        }
        let c = &rem[idx] * &lead;
        for (i, d) in den.iter().enumerate() {
            let t = d * &c;
            rem[k + i] -= t;
        }
        quot[k] = c;
    }
    (quot, trim(rem))
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.field.conductor == other.field.conductor {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = CycScalar::coerced_pair(self, other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar({self})")
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.field.conductor;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "z{n}")?;
                } else {
                    write!(f, "z{n}^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl core::ops::Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        CycScalar::add(self, rhs)
    }
}

impl core::ops::Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        CycScalar::sub(self, rhs)
    }
}

impl core::ops::Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        CycScalar::mul(self, rhs)
    }
}

impl core::ops::Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn phi_tables() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(4), 2);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(12), 4);
        let as_i64 = |p: Vec<BigInt>| -> Vec<i64> {
            p.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(as_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(9)), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zero_conductor_rejected() {
        assert_eq!(CycField::new(0).unwrap_err(), ScalarError::ZeroConductor);
    }

    #[test]
    fn roots_reduce_canonically() {
        let f4 = CycField::new(4).unwrap();
        assert_eq!(f4.root(2), f4.from_integer(-1));
        assert_eq!(f4.root(0), f4.one());

        let f1 = CycField::new(1).unwrap();
        assert_eq!(f1.root(5), f1.one());

        let f3 = CycField::new(3).unwrap();
        assert_eq!(f3.root(1).add(&f3.root(2)), f3.from_integer(-1));
    }

    #[test]
    fn inverses_multiply_back_to_one() {
        let f4 = CycField::new(4).unwrap();
        let minus_one = f4.from_integer(-1);
        assert_eq!(minus_one.inv().unwrap(), minus_one);

        let f8 = CycField::new(8).unwrap();
        assert_eq!(f8.root(1).inv().unwrap(), f8.root(7));

        let f5 = CycField::new(5).unwrap();
        let a = f5.one().add(&f5.root(1));
        let ainv = a.inv().unwrap();
        assert!(a.mul(&ainv).is_one());
        assert!(ainv.mul(&a).is_one());

        assert_eq!(f5.zero().inv().unwrap_err(), ScalarError::DivisionByZero);
    }

    #[test]
    fn cross_conductor_embedding_preserves_values() {
        let f3 = CycField::new(3).unwrap();
        let f6 = CycField::new(6).unwrap();
        // zeta_3 = zeta_6^2, and in Q(zeta_6): zeta_6^2 = zeta_6 - 1.
        let z3 = f3.root(1);
        let embedded = z3.promote(&f6);
        assert_eq!(embedded, f6.root(2));
        assert_eq!(embedded.coeffs()[0], rat(-1, 1));
        assert_eq!(embedded.coeffs()[1], rat(1, 1));
        // Eq across conductors agrees.
        assert_eq!(z3, f6.root(2));
        assert_ne!(z3, f6.root(1));
    }

    #[test]
    fn mixed_conductor_arithmetic() {
        let f4 = CycField::new(4).unwrap();
        let f3 = CycField::new(3).unwrap();
        let s = f4.root(1).mul(&f3.root(1));
        assert_eq!(s.conductor(), 12);
        assert_eq!(s, CycField::new(12).unwrap().root(3 + 4));
    }

    #[test]
    fn pow_and_order() {
        let f9 = CycField::new(9).unwrap();
        let z = f9.root(1);
        assert_eq!(z.pow(9).unwrap(), f9.one());
        assert_eq!(z.pow(-1).unwrap(), f9.root(8));
        assert_eq!(z.root_of_unity_order(), Some(9));
        assert_eq!(f9.root(3).root_of_unity_order(), Some(3));
        assert_eq!(f9.from_integer(2).root_of_unity_order(), None);
    }

    #[test]
    fn display_formats() {
        let f9 = CycField::new(9).unwrap();
        assert_eq!(alloc::format!("{}", f9.root(3)), "z9^3");
        assert_eq!(alloc::format!("{}", f9.from_integer(-1)), "-1");
        let s = f9
            .scalar_from_coeffs(alloc::vec![
                rat(1, 2),
                rat(-2, 3),
                rat(0, 1),
                rat(0, 1),
                rat(0, 1),
                rat(0, 1)
            ])
            .unwrap();
        assert_eq!(alloc::format!("{s}"), "1/2 - 2/3*z9");
    }
}
