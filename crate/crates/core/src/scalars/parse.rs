//! Parser for the textual scalar syntax produced by `ParamScalar::render`.
//!
//! Grammar: sums and differences of products and quotients of powers of
//! atoms; atoms are integers, `z` (a primitive root of the given
//! conductor), `d`, `m<k>`, `l<k>` and parenthesised expressions.

use super::{CycNumber, ParamScalar, ScalarError, Var};

pub fn parse_scalar(src: &str, conductor: u32) -> Result<ParamScalar, ScalarError> {
    if conductor == 0 {
        return Err(ScalarError::ZeroConductor);
    }
    let mut p = Parser { s: src.as_bytes(), pos: 0, conductor };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    conductor: u32,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> ScalarError {
        ScalarError::Parse(format!("{what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("expected a number"))
    }

    fn expr(&mut self) -> Result<ParamScalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ParamScalar, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = acc.checked_div(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<ParamScalar, ScalarError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.number()? as i64;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ParamScalar, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                let n = i64::try_from(n).map_err(|_| self.err("integer too large"))?;
                Ok(ParamScalar::from_integer(n))
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(ParamScalar::from_cyc(CycNumber::root_of_unity(self.conductor, 1)?))
            }
            Some(b'd') => {
                self.pos += 1;
                Ok(ParamScalar::var(Var::Delta))
            }
            Some(c @ (b'm' | b'l')) => {
                self.pos += 1;
                let k = self.number()?;
                let k = u16::try_from(k).map_err(|_| self.err("parameter index too large"))?;
                Ok(ParamScalar::var(if c == b'm' { Var::Mu(k) } else { Var::Lambda(k) }))
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let z = ParamScalar::from_cyc(CycNumber::root_of_unity(12, 5).unwrap());
        let d = ParamScalar::delta();
        let m = ParamScalar::mu(2);
        let l = ParamScalar::lambda(1);
        let cases = vec![
            ParamScalar::zero(),
            ParamScalar::from_integer(-7),
            &(&z * &d) - &m,
            (&(&d * &d) + &l).checked_div(&(&(&m * &z) + &ParamScalar::from_integer(3))).unwrap(),
            ParamScalar::from_integer(1).checked_div(&(&d - &ParamScalar::from_integer(2))).unwrap(),
        ];
        for c in cases {
            let text = c.render(12);
            let back = parse_scalar(&text, 12).unwrap();
            assert_eq!(back, c, "{text}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("d +", 4).is_err());
        assert!(parse_scalar("(d", 4).is_err());
        assert!(parse_scalar("q", 4).is_err());
        assert!(parse_scalar("1/0", 4).is_err());
    }

    #[test]
    fn powers_of_z() {
        assert_eq!(parse_scalar("z^2", 4).unwrap(), ParamScalar::from_integer(-1));
        assert_eq!(parse_scalar("z^-1", 4).unwrap(), parse_scalar("-z", 4).unwrap());
    }
}
