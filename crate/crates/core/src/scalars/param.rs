//! Rational functions in `δ`, `μ_c`, `λ_o` with cyclotomic coefficients.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{CycNumber, Poly, ScalarError, Var};

/// `num / den` with a monic denominator. Common factors are cancelled when
/// cheap to find (monomial content, exact division, univariate gcd); full
/// multivariate gcd is not attempted, so equality is decided by
/// cross-multiplication rather than by comparing fields.
#[derive(Clone)]
pub struct ParamScalar {
    num: Poly,
    den: Poly,
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        ParamScalar { num: Poly::one(), den: Poly::one() }
    }

    pub fn var(v: Var) -> Self {
        ParamScalar { num: Poly::var(v), den: Poly::one() }
    }

    pub fn delta() -> Self {
        Self::var(Var::Delta)
    }

    pub fn mu(class: usize) -> Self {
        Self::var(Var::Mu(class as u16))
    }

    pub fn lambda(orbit: usize) -> Self {
        Self::var(Var::Lambda(orbit as u16))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_cyc(CycNumber::from_integer(n))
    }

    pub fn from_cyc(c: CycNumber) -> Self {
        ParamScalar { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        ParamScalar { num: p, den: Poly::one() }
    }

    /// Builds `num / den`, rejecting a zero denominator.
    pub fn from_fraction(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value if it involves no parameter.
    pub fn as_constant(&self) -> Option<CycNumber> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(&n * &d.inv()?)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v.sort();
        v.dedup();
        v
    }

    fn normalized(mut num: Poly, mut den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return ParamScalar { num, den };
        }
        let g = num.monomial_content().gcd(&den.monomial_content());
        if !g.is_one() {
            num = num.div_monomial(&g);
            den = den.div_monomial(&g);
        }
        if let Some(c) = den.as_constant() {
            let ci = c.inv().expect("nonzero denominator");
            return ParamScalar { num: num.scale(&ci), den: Poly::one() };
        }
        if let Some(q) = num.div_exact(&den) {
            return ParamScalar { num: q, den: Poly::one() };
        }
        if let Some(q) = den.div_exact(&num) {
            num = Poly::one();
            den = q;
        } else if let Some(g) = num.univariate_gcd(&den) {
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides");
                den = den.div_exact(&g).expect("gcd divides");
            }
        }
        let lc = den.leading().expect("nonzero").1.clone();
        if !lc.is_one() {
            let li = lc.inv().expect("nonzero");
            num = num.scale(&li);
            den = den.scale(&li);
        }
        ParamScalar { num, den }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Substitutes the assigned variables; unassigned ones stay formal.
    pub fn specialize(&self, assignment: &dyn Fn(Var) -> Option<CycNumber>) -> Result<Self, ScalarError> {
        let den = self.den.substitute(assignment);
        if den.is_zero() {
            return Err(ScalarError::Pole);
        }
        Ok(Self::normalized(self.num.substitute(assignment), den))
    }

    /// Writes every coefficient in the power basis of `ζ_conductor`.
    pub fn render(&self, conductor: u32) -> String {
        let n = self.num.render_at(Some(conductor));
        if self.den.is_one() {
            return n;
        }
        format!("({n})/({})", self.den.render_at(Some(conductor)))
    }
}

impl Default for ParamScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for ParamScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for ParamScalar {}

impl<'a> Add<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: &ParamScalar) -> ParamScalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return ParamScalar::normalized(self.num.add(&rhs.num), self.den.clone());
        }
        ParamScalar::normalized(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl<'a> Sub<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: &ParamScalar) -> ParamScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &ParamScalar) -> ParamScalar {
        if self.is_zero() || rhs.is_zero() {
            return ParamScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ParamScalar { num: self.num.mul(&rhs.num), den: Poly::one() };
        }
        ParamScalar::normalized(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

/// Panics on division by zero; use [`ParamScalar::checked_div`] otherwise.
impl<'a> Div<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn div(self, rhs: &ParamScalar) -> ParamScalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, rhs: ParamScalar) -> ParamScalar { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl From<CycNumber> for ParamScalar {
    fn from(c: CycNumber) -> Self {
        Self::from_cyc(c)
    }
}

impl From<i64> for ParamScalar {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> ParamScalar {
        ParamScalar::delta()
    }

    fn n(k: i64) -> ParamScalar {
        ParamScalar::from_integer(k)
    }

    #[test]
    fn cancellation() {
        let q = &(&(&d() * &d()) - &d()) / &d();
        assert_eq!(q, &d() - &n(1));
        assert!(q.is_polynomial());
    }

    #[test]
    fn commutativity_cancels() {
        let m = ParamScalar::mu(0);
        let s = &(&(&d() * &m) + &(&m * &d())) - &(&n(2) * &(&d() * &m));
        assert!(s.is_zero());
    }

    #[test]
    fn evaluation_through_pole_free_form() {
        let f = &(&(&d() * &d()) - &n(1)) / &(&d() - &n(1));
        let v = f.specialize(&|v| (v == Var::Delta).then(|| CycNumber::from_integer(2))).unwrap();
        assert_eq!(v, n(3));
    }

    #[test]
    fn pole_reported() {
        let f = n(1).checked_div(&(&d() - &n(1))).unwrap();
        let r = f.specialize(&|v| (v == Var::Delta).then(CycNumber::one));
        assert_eq!(r, Err(ScalarError::Pole));
        assert_eq!(n(1).checked_div(&n(0)), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn partial_specialization() {
        let m = ParamScalar::mu(0);
        let f = &d() * &m;
        let s = f.specialize(&|v| (v == Var::Delta).then(|| CycNumber::from_integer(2))).unwrap();
        assert_eq!(s, &n(2) * &m);
        assert_eq!(d().specialize(&|_| None).unwrap(), d());
    }

    #[test]
    fn monic_denominator() {
        let f = n(1).checked_div(&(&n(2) * &(&d() + &n(1)))).unwrap();
        assert!(f.denominator().leading().unwrap().1.is_one());
        assert_eq!(f.to_string(), "(1/2)/(d + 1)");
    }
}
