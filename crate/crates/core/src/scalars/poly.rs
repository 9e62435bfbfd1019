//! Sparse multivariate polynomials over `CycNumber` in the deformation
//! parameters.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use super::CycNumber;

/// A formal parameter. The derived order `δ < μ_c < λ_o` is the variable
/// order used by the monomial order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Delta,
    /// One per conjugacy class of reflections.
    Mu(u16),
    /// One per orbit of hyperplanes.
    Lambda(u16),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Delta => write!(f, "d"),
            Var::Mu(c) => write!(f, "m{c}"),
            Var::Lambda(o) => write!(f, "l{o}"),
        }
    }
}

/// Power product, sorted by variable with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(SmallVec<[(Var, u32); 3]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        let mut s = SmallVec::new();
        s.push((v, 1));
        Monomial(s)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e)
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) if a == b => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, ea)), Some(&(b, _))) if a < b => {
                    out.push((a, ea));
                    i += 1;
                }
                (Some(_), Some(&(b, eb))) => {
                    out.push((b, eb));
                    j += 1;
                }
                (Some(&x), None) => {
                    out.push(x);
                    i += 1;
                }
                (None, Some(&x)) => {
                    out.push(x);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::new();
        for &(v, e) in &self.0 {
            let f = other.exponent(v);
            if f > e {
                return None;
            }
            if e > f {
                out.push((v, e - f));
            }
        }
        if other.0.iter().any(|(v, _)| self.exponent(*v) == 0) {
            return None;
        }
        Some(Monomial(out))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|&(v, e)| {
                    let f = other.exponent(v);
                    (f > 0).then_some((v, e.min(f)))
                })
                .collect(),
        )
    }

    fn without(&self, v: Var) -> Monomial {
        Monomial(self.0.iter().copied().filter(|(w, _)| *w != v).collect())
    }
}

impl Ord for Monomial {
    /// Degree first, then lexicographic with the largest variable compared
    /// first.
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        let mut a = self.0.iter().rev().peekable();
        let mut b = other.0.iter().rev().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va != vb {
                        return va.cmp(&vb);
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Terms sorted ascending in the monomial order, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: Vec<(Monomial, CycNumber)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: CycNumber) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: vec![(Monomial::one(), c)] }
    }

    pub fn one() -> Self {
        Poly::constant(CycNumber::one())
    }

    pub fn var(v: Var) -> Self {
        Poly { terms: vec![(Monomial::var(v), CycNumber::one())] }
    }

    pub fn monomial(m: Monomial, c: CycNumber) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: vec![(m, c)] }
    }

    fn from_map(map: BTreeMap<Monomial, CycNumber>) -> Self {
        Poly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(Monomial, CycNumber)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<CycNumber> {
        match self.terms.as_slice() {
            [] => Some(CycNumber::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, CycNumber)> {
        self.terms.last()
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.iter().flat_map(|(m, _)| m.0.iter().map(|(v, _)| *v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn add(&self, other: &Poly) -> Poly {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &CycNumber) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly { terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &CycNumber) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        // Multiplying by a monomial preserves the order.
        Poly { terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut map: BTreeMap<Monomial, CycNumber> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match map.get_mut(&m) {
                    Some(e) => *e = &*e + &c,
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        Poly::from_map(map)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes values for some variables; the rest stay formal.
    pub fn substitute(&self, assignment: &dyn Fn(Var) -> Option<CycNumber>) -> Poly {
        let mut map: BTreeMap<Monomial, CycNumber> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = SmallVec::new();
            for &(v, e) in &m.0 {
                match assignment(v) {
                    Some(val) => coeff = &coeff * &val.pow(e as i64).expect("nonnegative power"),
                    None => rest.push((v, e)),
                }
            }
            if coeff.is_zero() {
                continue;
            }
            let key = Monomial(rest);
            match map.get_mut(&key) {
                Some(e) => *e = &*e + &coeff,
                None => {
                    map.insert(key, coeff);
                }
            }
        }
        Poly::from_map(map)
    }

    /// Exact quotient `self / divisor` if the division leaves no remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading()?.clone();
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading().cloned() {
            let qm = m.div(&lm)?;
            let qc = &c * &lc_inv;
            rem = rem.sub(&divisor.mul_term(&qm, &qc));
            quot = quot.add(&Poly::monomial(qm, qc));
        }
        Some(quot)
    }

    /// Greatest common divisor of all monomials.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |g, (m, _)| g.gcd(m))
    }

    pub fn div_monomial(&self, m: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(n, c)| (n.div(m).expect("divisible"), c.clone())).collect() }
    }

    /// Scales so the leading coefficient becomes one.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    fn univariate_degree(&self, v: Var) -> Option<u32> {
        let mut deg = 0;
        for (m, _) in &self.terms {
            if m.0.iter().any(|(w, _)| *w != v) {
                return None;
            }
            deg = deg.max(m.exponent(v));
        }
        Some(deg)
    }

    /// Monic gcd when both operands are univariate in the same variable
    /// (or constant); `None` otherwise.
    pub fn univariate_gcd(&self, other: &Poly) -> Option<Poly> {
        let vars: Vec<Var> = {
            let mut v = self.vars();
            v.extend(other.vars());
            v.sort();
            v.dedup();
            v
        };
        if vars.len() > 1 {
            return None;
        }
        let Some(&v) = vars.first() else {
            return Some(Poly::one());
        };
        let (mut a, mut b) = (self.clone(), other.clone());
        if a.univariate_degree(v).is_none() || b.univariate_degree(v).is_none() {
            return None;
        }
        while !b.is_zero() {
            let r = a.univariate_rem(&b, v);
            a = b;
            b = r;
        }
        Some(a.monic())
    }

    fn univariate_rem(&self, divisor: &Poly, v: Var) -> Poly {
        let dd = divisor.univariate_degree(v).unwrap();
        let lc_inv = divisor.leading().unwrap().1.inv().unwrap();
        let mut rem = self.clone();
        while let Some((m, c)) = rem.leading().cloned() {
            let e = m.exponent(v);
            if e < dd {
                break;
            }
            let qm = if e == dd { Monomial::one() } else { Monomial(smallvec::smallvec![(v, e - dd)]) };
            rem = rem.sub(&divisor.mul_term(&qm, &(&c * &lc_inv)));
        }
        rem
    }

    /// Writes the polynomial as a sum over powers of `v`.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let entry = out.entry(e).or_default();
            *entry = entry.add(&Poly::monomial(m.without(v), c.clone()));
        }
        out
    }

    /// Renders with every coefficient expressed at conductor `m`.
    pub fn render_at(&self, m: Option<u32>) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (mono, c) in self.terms.iter().rev() {
            let c = match m {
                Some(m) => c.promote(m).expect("conductor divides render conductor"),
                None => c.clone(),
            };
            let (neg, body) = match c.as_rational() {
                Some(r) => {
                    let a = r.abs();
                    let body = if mono.is_one() {
                        a.to_string()
                    } else if a.is_one() {
                        mono.to_string()
                    } else {
                        format!("{a}*{mono}")
                    };
                    (r.is_negative(), body)
                }
                None => {
                    let cs = c.render();
                    (false, if mono.is_one() { cs } else { format!("{cs}*{mono}") })
                }
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_at(None))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_at(None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> Poly {
        Poly::var(Var::Delta)
    }

    fn c(n: i64) -> Poly {
        Poly::constant(CycNumber::from_integer(n))
    }

    #[test]
    fn monomial_order_is_deglex_with_lambda_largest() {
        let delta = Monomial::var(Var::Delta);
        let mu = Monomial::var(Var::Mu(0));
        let lam = Monomial::var(Var::Lambda(0));
        assert!(delta < mu && mu < lam);
        assert!(lam < delta.mul(&delta));
        assert!(Monomial::var(Var::Mu(0)) < Monomial::var(Var::Mu(1)));
        assert!(delta.mul(&lam) > mu.mul(&mu));
    }

    #[test]
    fn exact_division() {
        let p = d().mul(&d()).sub(&c(1));
        let q = d().sub(&c(1));
        assert_eq!(p.div_exact(&q).unwrap(), d().add(&c(1)));
        assert!(p.div_exact(&d()).is_none());
    }

    #[test]
    fn gcd_univariate() {
        let a = d().mul(&d()).sub(&c(1));
        let b = d().mul(&d()).sub(&d());
        assert_eq!(a.univariate_gcd(&b).unwrap(), d().sub(&c(1)));
        let m = Poly::var(Var::Mu(0));
        assert!(a.univariate_gcd(&m).is_none());
    }

    #[test]
    fn render() {
        let p = d().mul(&d()).scale(&CycNumber::from_integer(3)).sub(&Poly::var(Var::Mu(1))).add(&c(2));
        assert_eq!(p.to_string(), "3*d^2 - m1 + 2");
    }
}
