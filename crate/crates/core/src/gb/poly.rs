//! Noncommutative polynomials: sparse sums of words with field coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::scalars::Field;

pub type Letter = u16;
pub type Word = SmallVec<[Letter; 8]>;

/// Degree-lexicographic order: longer words are larger, equal lengths
/// compare letter by letter with larger ids larger.
pub fn cmp_words(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Word wrapper ordered by [`cmp_words`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrdWord(pub Word);

impl Ord for OrdWord {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_words(&self.0, &other.0)
    }
}

impl PartialOrd for OrdWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Terms sorted with the leading (largest) word first; no zero coefficients.
#[derive(Clone, PartialEq)]
pub struct NcPoly<F> {
    terms: Vec<(Word, F)>,
}

impl<F: Field> NcPoly<F> {
    pub fn zero() -> Self {
        NcPoly { terms: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(Word::new(), c)
    }

    pub fn monomial(w: Word, c: F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NcPoly { terms: vec![(w, c)] }
    }

    pub fn word(letters: &[Letter]) -> Self {
        Self::monomial(Word::from_slice(letters), F::one())
    }

    /// Sums arbitrary terms, combining repeated words.
    pub fn from_terms(terms: impl IntoIterator<Item = (Word, F)>) -> Self {
        let mut map: BTreeMap<OrdWord, F> = BTreeMap::new();
        for (w, c) in terms {
            match map.get_mut(&OrdWord(w.clone())) {
                Some(v) => *v = v.add(&c),
                None => {
                    map.insert(OrdWord(w), c);
                }
            }
        }
        NcPoly { terms: map.into_iter().rev().filter(|(_, c)| !c.is_zero()).map(|(w, c)| (w.0, c)).collect() }
    }

    pub(crate) fn from_sorted(terms: Vec<(Word, F)>) -> Self {
        NcPoly { terms }
    }

    pub fn terms(&self) -> &[(Word, F)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.first().map(|(w, _)| w)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn degree(&self) -> usize {
        self.leading_word().map_or(0, |w| w.len())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match cmp_words(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.add(&other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        NcPoly { terms: out }
    }

    pub fn neg(&self) -> Self {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(w, d)| (w.clone(), d.mul(c))).collect() }
    }

    /// `c · left · self · right`; the order is preserved.
    pub fn sandwich(&self, left: &[Letter], right: &[Letter], c: &F) -> Self {
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, d)| {
                    let mut x = Word::with_capacity(left.len() + w.len() + right.len());
                    x.extend_from_slice(left);
                    x.extend_from_slice(w);
                    x.extend_from_slice(right);
                    (x, d.mul(c))
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_terms(self.terms.iter().flat_map(|(a, x)| {
            other.terms.iter().map(move |(b, y)| {
                let mut w = a.clone();
                w.extend_from_slice(b);
                (w, x.mul(y))
            })
        }))
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> NcPoly<G> {
        NcPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<NcPoly<G>, E> {
        let terms = self.terms.iter().map(|(w, c)| Ok((w.clone(), f(c)?))).collect::<Result<Vec<_>, E>>()?;
        Ok(NcPoly::from_terms(terms))
    }

    /// Renders as `(c)*a*b + …` using the given letter names.
    pub fn render(&self, names: &[String], scalar: &dyn Fn(&F) -> String) -> String {
        if self.terms.is_empty() {
            return "(0)".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                let mut s = format!("({})", scalar(c));
                for &l in w {
                    s.push('*');
                    s.push_str(&names[l as usize]);
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<F: fmt::Display> fmt::Debug for NcPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("(0)");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for l in w {
                write!(f, "*x{l}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn order_and_combination() {
        assert_eq!(cmp_words(&[0, 0], &[1]), Ordering::Greater);
        assert_eq!(cmp_words(&[1, 0], &[0, 1]), Ordering::Greater);
        let p = NcPoly::from_terms(vec![
            (Word::from_slice(&[0]), r(1)),
            (Word::from_slice(&[1, 0]), r(2)),
            (Word::from_slice(&[0]), r(-1)),
        ]);
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.leading_word().unwrap().as_slice(), &[1, 0]);
    }

    #[test]
    fn product_is_concatenation() {
        let x = NcPoly::<Rational>::word(&[0]);
        let y = NcPoly::<Rational>::word(&[1]);
        let xy = x.mul(&y);
        let yx = y.mul(&x);
        assert_ne!(xy, yx);
        assert_eq!(xy.sub(&yx).terms().len(), 2);
    }
}
