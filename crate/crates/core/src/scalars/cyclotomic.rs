//! Elements of cyclotomic fields `Q(ζ_N)`.
//!
//! An element is stored as its residue modulo the `N`-th cyclotomic
//! polynomial `Φ_N`, in the power basis `1, ζ, …, ζ^(φ(N)-1)`. That residue is
//! unique, so equality is a coefficient comparison once both operands sit at a
//! common conductor.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num::integer::{gcd, lcm};
use smallvec::SmallVec;

use super::{Rational, ScalarError};

type Coeffs = SmallVec<[Rational; 4]>;

struct CycloData {
    degree: usize,
    /// Monic `Φ_N`, low degree first, length `degree + 1`.
    phi: Vec<i64>,
    /// `x^j mod Φ_N` for `0 <= j < N`.
    powers: Vec<Vec<i64>>,
}

fn cache() -> &'static RwLock<HashMap<u32, Arc<CycloData>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CycloData>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn data(n: u32) -> Arc<CycloData> {
    if let Some(d) = cache().read().unwrap().get(&n) {
        return d.clone();
    }
    let phi = cyclotomic_polynomial(n);
    let degree = phi.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; degree.max(1)];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur[..degree].to_vec());
        // multiply by x, then fold the overflow coefficient back through Φ.
        let mut next = vec![0i64; degree + 1];
        next[1..=degree].copy_from_slice(&cur[..degree]);
        let top = next[degree];
        if top != 0 {
            for i in 0..degree {
                next[i] -= top * phi[i];
            }
        }
        next.truncate(degree.max(1));
        cur = next;
    }
    let d = Arc::new(CycloData { degree, phi, powers });
    cache().write().unwrap().insert(n, d.clone());
    d
}

/// Integer coefficients of `Φ_n`, low degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    if let Some(d) = cache().read().unwrap().get(&n) {
        return d.phi.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = data(d).phi.clone();
            num = exact_div_monic(&num, &phi_d);
        }
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (i, &di) in den.iter().enumerate() {
                rem[k + i] -= c * di;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

/// Euler's totient, i.e. the degree of `Q(ζ_n)`.
pub fn totient(n: u32) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}

/// An exact element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct CycNumber {
    conductor: u32,
    coeffs: Coeffs,
}

impl CycNumber {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = Coeffs::new();
        coeffs.push(r);
        CycNumber { conductor: 1, coeffs }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    /// `ζ_N^power`, reduced to canonical form.
    pub fn root_of_unity(conductor: u32, power: i64) -> Result<Self, ScalarError> {
        if conductor == 0 {
            return Err(ScalarError::ZeroConductor);
        }
        let d = data(conductor);
        let k = power.rem_euclid(conductor as i64) as usize;
        let coeffs = d.powers[k].iter().map(|&c| Rational::from_integer(c)).collect();
        Ok(CycNumber { conductor, coeffs })
    }

    /// Builds a value from power-basis coefficients at `conductor`, reducing
    /// modulo `Φ_N` when more than `φ(N)` coefficients are given.
    pub fn from_coeffs(conductor: u32, coeffs: &[Rational]) -> Result<Self, ScalarError> {
        if conductor == 0 {
            return Err(ScalarError::ZeroConductor);
        }
        let d = data(conductor);
        let mut out: Coeffs = std::iter::repeat_n(Rational::zero(), d.degree).collect();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &d.powers[k % conductor as usize];
            for (o, &pi) in out.iter_mut().zip(p) {
                if pi != 0 {
                    *o = &*o + &(c * &Rational::from_integer(pi));
                }
            }
        }
        Ok(CycNumber { conductor, coeffs: out })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.is_rational()
    }

    /// Re-expresses the value in `Q(ζ_m)`; `m` must be a multiple of the
    /// current conductor.
    pub fn promote(&self, m: u32) -> Result<Self, ScalarError> {
        if m == 0 {
            return Err(ScalarError::ZeroConductor);
        }
        if m % self.conductor != 0 {
            return Err(ScalarError::Conductor { from: self.conductor, to: m });
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let d = data(m);
        let step = (m / self.conductor) as usize;
        let mut out: Coeffs = std::iter::repeat_n(Rational::zero(), d.degree).collect();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &d.powers[(k * step) % m as usize];
            for (o, &pi) in out.iter_mut().zip(p) {
                if pi != 0 {
                    *o = &*o + &(c * &Rational::from_integer(pi));
                }
            }
        }
        Ok(CycNumber { conductor: m, coeffs: out })
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let m = lcm(a.conductor, b.conductor);
        (a.promote(m).unwrap(), b.promote(m).unwrap())
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return CycNumber::zero();
        }
        CycNumber { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    fn add_rational(&self, r: &Rational) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = &out.coeffs[0] + r;
        out
    }

    pub fn inv(&self) -> Option<Self> {
        if let Some(r) = self.as_rational() {
            return r.inv().map(Self::from_rational);
        }
        // Solve (multiplication by self) · u = 1 in the power basis.
        let d = data(self.conductor);
        let n = d.degree;
        let mut cols: Vec<Coeffs> = Vec::with_capacity(n);
        let mut cur = self.clone();
        let zeta = CycNumber::root_of_unity(self.conductor, 1).unwrap();
        for _ in 0..n {
            cols.push(cur.coeffs.clone());
            cur = &cur * &zeta;
        }
        // augmented matrix rows: a[i][j] = cols[j][i]
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = (0..n).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            let inv = a[col][col].inv()?;
            for x in a[col].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x = &*x - &(&f * p);
                    }
                }
            }
        }
        let coeffs = a.into_iter().map(|row| row[n].clone()).collect();
        Some(CycNumber { conductor: self.conductor, coeffs })
    }

    pub fn pow(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = CycNumber::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }

    /// Lexicographic order on coefficient vectors; both operands are first
    /// brought to a common conductor. Used only to fix deterministic
    /// orderings, it carries no arithmetic meaning.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        let (a, b) = Self::aligned(self, other);
        a.coeffs.iter().cmp(b.coeffs.iter())
    }

    /// Renders in the power basis of `ζ_m` as `c0 + c1*z + …`.
    pub fn render_at(&self, m: u32) -> Result<String, ScalarError> {
        Ok(self.promote(m)?.render())
    }

    /// Rendering in the value's own conductor.
    pub fn render(&self) -> String {
        if let Some(r) = self.as_rational() {
            return r.to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match k {
                0 => c.abs().to_string(),
                _ => {
                    let z = if k == 1 { "z".to_string() } else { format!("z^{k}") };
                    if c.abs().is_one() {
                        z
                    } else {
                        format!("{}*{z}", c.abs())
                    }
                }
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        format!("({out})")
    }
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a == b,
            (None, None) => {
                let (a, b) = Self::aligned(self, other);
                a.coeffs == b.coeffs
            }
            _ => false,
        }
    }
}

impl Eq for CycNumber {}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        if let Some(r) = rhs.as_rational() {
            return self.add_rational(r);
        }
        if let Some(r) = self.as_rational() {
            return rhs.add_rational(r);
        }
        if self.conductor == rhs.conductor {
            let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
            return CycNumber { conductor: self.conductor, coeffs };
        }
        let (a, b) = CycNumber::aligned(self, rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self + &(-rhs)
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        if self.conductor != rhs.conductor {
            let (a, b) = CycNumber::aligned(self, rhs);
            return &a * &b;
        }
        let d = data(self.conductor);
        let n = d.degree;
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = &prod[i + j] + &(a * b);
                }
            }
        }
        for k in (n..2 * n - 1).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                let p = d.phi[i];
                if p != 0 {
                    let idx = k - n + i;
                    prod[idx] = &prod[idx] - &(&c * &Rational::from_integer(p));
                }
            }
        }
        prod.truncate(n);
        CycNumber { conductor: self.conductor, coeffs: prod.into_iter().collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: CycNumber) -> CycNumber { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<Rational> for CycNumber {
    fn from(r: Rational) -> Self {
        CycNumber::from_rational(r)
    }
}

impl From<i64> for CycNumber {
    fn from(n: i64) -> Self {
        CycNumber::from_integer(n)
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.render(), self.conductor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycNumber {
        CycNumber::root_of_unity(n, k).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for n in 1..40 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, totient(n));
        }
    }

    #[test]
    fn fourth_root_squares_to_minus_one() {
        let i = z(4, 1);
        assert_eq!(&i * &i, CycNumber::from_integer(-1));
    }

    #[test]
    fn root_sums() {
        let i = z(4, 1);
        let mut acc = CycNumber::zero();
        let mut p = CycNumber::one();
        for _ in 0..4 {
            acc = &acc + &p;
            p = &p * &i;
        }
        assert!(acc.is_zero());
        let one = CycNumber::one();
        let four = (0..4).fold(CycNumber::zero(), |a, _| &a + &one);
        assert_eq!(four, CycNumber::from_integer(4));
    }

    #[test]
    fn zero_conductor_rejected() {
        assert!(matches!(CycNumber::root_of_unity(0, 1), Err(ScalarError::ZeroConductor)));
    }

    #[test]
    fn promotion_is_coherent() {
        let a = &z(3, 1) + &CycNumber::from_integer(2);
        let b = a.promote(12).unwrap();
        assert_eq!(b.conductor(), 12);
        assert_eq!(a, b);
        assert_eq!(&z(6, 2), &z(3, 1));
        assert_eq!(&z(12, 4) * &z(4, 1), z(12, 7));
    }

    #[test]
    fn inverses() {
        for n in [3u32, 5, 7, 8, 9, 12] {
            let a = &(&z(n, 1) + &CycNumber::from_integer(3)) * &z(n, 2);
            let inv = a.inv().unwrap();
            assert!((&a * &inv).is_one(), "conductor {n}");
        }
        assert!(CycNumber::zero().inv().is_none());
    }

    #[test]
    fn rendering() {
        let a = &(&z(4, 1) * &CycNumber::from_integer(-2)) + &CycNumber::from_integer(1);
        assert_eq!(a.render(), "(1 - 2*z)");
        assert_eq!(z(5, 4).render(), "(-1 - z - z^2 - z^3)");
        assert_eq!(CycNumber::from_rational(Rational::new(-1, 2)).render(), "-1/2");
    }
}
