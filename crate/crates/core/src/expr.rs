//! Text form of symmetric functions.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := coeff ['*' product] | product
//! coeff   := int ['/' int]
//! product := factor ('*' factor)*
//! factor  := basis '[' [int (',' int)*] ']' ['^' int]
//! basis   := p | m | e | h | s | f
//! ```
//!
//! Whitespace is allowed between tokens. Error positions are byte offsets.

use num::{BigInt, One, Zero};

use crate::basis::{basis_arc, expand, BasisId};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::symfunc::SymFunc;

pub fn parse_expression(src: &str) -> Result<SymFunc> {
    let mut p = Parser { src, pos: 0 };
    let g = p.expr()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(g)
}

/// `g` written in basis `b`, in the same grammar [`parse_expression`] reads.
pub fn format_expression(g: &SymFunc, b: BasisId) -> String {
    expand(g, b).to_string()
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
    }

    /// Consumes `c` after optional whitespace.
    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }

    fn small(&mut self) -> Result<u32> {
        let start = self.pos;
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| Error::Parse {
            position: start,
            message: "integer too large".into(),
        })
    }

    fn expr(&mut self) -> Result<SymFunc> {
        let mut out = SymFunc::zero();
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            if negative {
                out -= &t;
            } else {
                out += &t;
            }
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                return Ok(out);
            }
        }
    }

    fn term(&mut self) -> Result<SymFunc> {
        self.skip_ws();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.integer()?;
            let den = if self.eat('/') {
                let at = self.pos;
                let d = self.integer()?;
                if d.is_zero() {
                    return Err(Error::Parse {
                        position: at,
                        message: "zero denominator".into(),
                    });
                }
                d
            } else {
                BigInt::one()
            };
            let c = Scalar::new(num, den);
            if self.eat('*') {
                Ok(self.product()?.scale(&c))
            } else {
                Ok(SymFunc::constant(c))
            }
        } else {
            self.product()
        }
    }

    fn product(&mut self) -> Result<SymFunc> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SymFunc> {
        self.skip_ws();
        let at = self.pos;
        let b = self.peek().and_then(BasisId::from_letter).ok_or_else(|| {
            self.error("expected a basis letter (p, m, e, h, s, f) or a coefficient")
        })?;
        self.pos += 1;
        self.expect('[')?;
        let mut parts = Vec::new();
        if !self.eat(']') {
            loop {
                parts.push(self.small()?);
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
        }
        let lambda = Partition::new(parts).map_err(|e| Error::Parse {
            position: at,
            message: e.to_string(),
        })?;
        let atom = basis_arc(b, &lambda);
        if self.eat('^') {
            let n = self.small()?;
            Ok(atom.pow(n))
        } else {
            Ok((*atom).clone())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::basis_element;
    use crate::part;
    use crate::scalar::ratio;

    #[test]
    fn parse_examples() {
        let h21 = basis_element(BasisId::H, &part![2, 1]);
        assert_eq!(parse_expression("h[2,1]").unwrap(), h21);

        let combo = &basis_element(BasisId::S, &part![2, 1]).scale(&ratio(3, 2))
            - &basis_element(BasisId::P, &part![3]);
        assert_eq!(parse_expression("3/2*s[2,1] - p[3]").unwrap(), combo);

        let h1 = basis_element(BasisId::H, &part![1]);
        assert_eq!(parse_expression("h[1]^4").unwrap(), h1.pow(4));
        assert_eq!(parse_expression(" 1 ").unwrap(), SymFunc::one());
        assert_eq!(
            parse_expression("-1/2 * h[2]*e[1]").unwrap(),
            (&basis_element(BasisId::H, &part![2]) * &basis_element(BasisId::E, &part![1]))
                .scale(&ratio(-1, 2))
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = |s: &str| match parse_expression(s) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err("h[2,1"), 5);
        assert_eq!(err("q[1]"), 0);
        assert_eq!(err("h[1] +"), 6);
        assert_eq!(err("h[1,2]"), 0);
        assert_eq!(err("1/0*h[1]"), 2);
        assert_eq!(err("h[1] h[2]"), 5);
    }

    #[test]
    fn printing_round_trips() {
        let g = parse_expression("3/2*s[2,1] - p[3] + 2").unwrap();
        for b in BasisId::ALL {
            let text = format_expression(&g, b);
            assert_eq!(parse_expression(&text).unwrap(), g, "{text}");
        }
        assert_eq!(format_expression(&SymFunc::zero(), BasisId::S), "0");
    }
}
