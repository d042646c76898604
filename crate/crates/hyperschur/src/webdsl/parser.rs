//! Recursive-descent parser for diagram expressions.
//!
//! Grammar (whitespace is free between tokens):
//!
//! ```text
//! expr    := term ("+" term)*
//! term    := [integer "*"] chain
//! chain   := layer (";" layer)*
//! layer   := "[" halfgens ("|" axisgen)? "]"
//! halfgens:= (halfgen ("," halfgen)*)?
//! ```
//!
//! A layer whose only generator is an axis generator may omit the `|`, so
//! both `[|M(3,6)]` and `[M(3,6)]` parse. Coefficients are optional (then
//! `1`), arbitrary-precision, and may be negative. Errors carry the byte
//! offset of the offending token.

use num_bigint::BigInt;

use crate::hypercomb::SymmetryMode;

use super::{AxisGen, Chain, DiagramExpr, HalfGen, Layer, WebError};

/// Parses a full expression in the given mode; plain mode rejects axis
/// generators and the `|` separator.
pub fn parse_expr(text: &str, mode: SymmetryMode) -> Result<DiagramExpr, WebError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        mode,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    mode: SymmetryMode,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> WebError {
        WebError::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn error_at(&self, offset: usize, message: impl Into<String>) -> WebError {
        WebError::Parse {
            offset,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .map(|b| b.is_ascii_whitespace())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8, what: &str) -> Result<(), WebError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn integer_digits(&mut self) -> Result<&'a str, WebError> {
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .map(|b| b.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("digits are ascii"))
    }

    fn parse_usize(&mut self) -> Result<usize, WebError> {
        let start = self.pos;
        let digits = self.integer_digits()?;
        digits
            .parse::<usize>()
            .map_err(|_| self.error_at(start, "number is too large"))
    }

    fn parse_coefficient(&mut self) -> Result<BigInt, WebError> {
        let negative = self.eat(b'-');
        let digits = self.integer_digits()?;
        let mut value: BigInt = digits.parse().expect("digit strings parse as integers");
        if negative {
            value = -value;
        }
        Ok(value)
    }

    fn ident(&mut self) -> Result<(&'a str, usize), WebError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .map(|b| b.is_ascii_alphabetic())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a generator name"));
        }
        Ok((
            std::str::from_utf8(&self.bytes[start..self.pos]).expect("letters are ascii"),
            start,
        ))
    }

    fn args(&mut self, count: usize) -> Result<Vec<usize>, WebError> {
        self.skip_ws();
        self.expect(b'(', "'('")?;
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            self.skip_ws();
            if i > 0 {
                self.expect(b',', "','")?;
                self.skip_ws();
            }
            out.push(self.parse_usize()?);
        }
        self.skip_ws();
        self.expect(b')', "')'")?;
        Ok(out)
    }

    fn axis_gen(&mut self, name: &str, offset: usize) -> Result<AxisGen, WebError> {
        if self.mode == SymmetryMode::Plain {
            return Err(self.error_at(offset, "axis generators require hyper mode"));
        }
        let gen = match name {
            "ID" => AxisGen::Id(self.args(1)?[0]),
            "M" => {
                let a = self.args(2)?;
                AxisGen::Merge(a[0], a[1])
            }
            "S" => {
                let a = self.args(2)?;
                AxisGen::Split(a[0], a[1])
            }
            "X" => {
                let a = self.args(2)?;
                AxisGen::Cross(a[0], a[1])
            }
            _ => unreachable!("caller checked the name"),
        };
        gen.validate()
            .map_err(|reason| self.error_at(offset, reason))?;
        Ok(gen)
    }

    fn half_gen(&mut self, name: &str, offset: usize) -> Result<HalfGen, WebError> {
        let gen = match name {
            "id" => HalfGen::Id(self.args(1)?[0]),
            "m" => {
                let a = self.args(2)?;
                HalfGen::Merge(a[0], a[1])
            }
            "s" => {
                let a = self.args(2)?;
                HalfGen::Split(a[0], a[1])
            }
            "x" => {
                let a = self.args(2)?;
                HalfGen::Cross(a[0], a[1])
            }
            _ => unreachable!("caller checked the name"),
        };
        gen.validate()
            .map_err(|reason| self.error_at(offset, reason))?;
        Ok(gen)
    }

    fn layer(&mut self) -> Result<Layer, WebError> {
        self.skip_ws();
        let layer_start = self.pos;
        self.expect(b'[', "'['")?;
        self.skip_ws();
        if self.peek() == Some(b']') {
            return Err(self.error("a layer needs at least one generator"));
        }
        let mut left: Vec<HalfGen> = Vec::new();
        let mut axis: Option<AxisGen> = None;
        loop {
            if self.eat(b'|') {
                let (name, offset) = self.ident()?;
                if !matches!(name, "M" | "S" | "X" | "ID") {
                    return Err(self.error_at(
                        offset,
                        format!("unknown axis generator {name:?}"),
                    ));
                }
                axis = Some(self.axis_gen(name, offset)?);
                self.skip_ws();
                self.expect(b']', "']' after the axis generator")?;
                break;
            }
            let (name, offset) = self.ident()?;
            match name {
                "id" | "m" | "s" | "x" => {
                    left.push(self.half_gen(name, offset)?);
                }
                "M" | "S" | "X" | "ID" => {
                    // An axis generator may stand alone without `|`.
                    if !left.is_empty() {
                        return Err(self.error_at(
                            offset,
                            "axis generators after other generators need '|'",
                        ));
                    }
                    axis = Some(self.axis_gen(name, offset)?);
                    self.skip_ws();
                    self.expect(b']', "']' after the axis generator")?;
                    break;
                }
                _ => {
                    return Err(self.error_at(offset, format!("unknown generator {name:?}")));
                }
            }
            self.skip_ws();
            if self.eat(b',') {
                continue;
            }
            if self.eat(b']') {
                break;
            }
            if self.peek() == Some(b'|') {
                continue;
            }
            return Err(self.error("expected ',', '|' or ']'"));
        }
        Layer::assemble(self.mode, left, axis).map_err(|e| match e {
            WebError::InvalidLayer { reason } => self.error_at(layer_start, reason),
            other => other,
        })
    }

    fn chain(&mut self) -> Result<Chain, WebError> {
        let mut layers = vec![self.layer()?];
        loop {
            self.skip_ws();
            let mark = self.pos;
            if self.eat(b';') {
                layers.push(self.layer()?);
            } else {
                self.pos = mark;
                break;
            }
        }
        Chain::new(layers)
    }

    fn term(&mut self) -> Result<(BigInt, Chain), WebError> {
        self.skip_ws();
        let coeff = if self
            .peek()
            .map(|b| b.is_ascii_digit() || b == b'-')
            .unwrap_or(false)
        {
            let value = self.parse_coefficient()?;
            self.skip_ws();
            self.expect(b'*', "'*' after the coefficient")?;
            value
        } else {
            BigInt::from(1)
        };
        let chain = self.chain()?;
        Ok((coeff, chain))
    }

    fn expr(&mut self) -> Result<DiagramExpr, WebError> {
        let mut terms = vec![self.term()?];
        loop {
            self.skip_ws();
            if self.eat(b'+') {
                terms.push(self.term()?);
            } else {
                break;
            }
        }
        DiagramExpr::from_terms(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercomb::Hypercomposition;

    fn parse_hyper(text: &str) -> Result<DiagramExpr, WebError> {
        parse_expr(text, SymmetryMode::Hyper)
    }

    #[test]
    fn round_trips_canonical_text() {
        for text in [
            "1*[m(1,1)]",
            "1*[M(3,6)]",
            "1*[id(2)|X(1,4)]",
            "1*[s(1,1)|S(2,2)] ; [id(1),x(1,2)|ID(2)] ; [m(1,2)|M(1,2)]",
            "2*[x(1,1)] + -1*[id(1),id(1)]",
            "160*[ID(12)]",
            "1*[S(2,0)]",
        ] {
            let expr = parse_hyper(text).unwrap();
            // Canonical output always renders coefficients; parse it again.
            let canonical = expr.to_string();
            let reparsed = parse_hyper(&canonical).unwrap();
            assert_eq!(expr, reparsed, "{text}");
        }
    }

    #[test]
    fn whitespace_and_optional_pieces() {
        let a = parse_hyper("[ m(1,1) ]").unwrap();
        let b = parse_hyper("1*[m(1,1)]").unwrap();
        assert_eq!(a, b);
        let a = parse_hyper("[|M(3,6)]").unwrap();
        let b = parse_hyper("[M(3,6)]").unwrap();
        assert_eq!(a, b);
        let spaced = parse_hyper(" [ s(1,1) | S(2,2) ]  ;  [ id(1) , x(1,2) | ID(2) ] ; [m(1,2)|M(1,2)]")
            .unwrap();
        assert_eq!(
            spaced.to_string(),
            "1*[s(1,1)|S(2,2)] ; [id(1),x(1,2)|ID(2)] ; [m(1,2)|M(1,2)]"
        );
    }

    #[test]
    fn objects_are_inferred() {
        let expr = parse_hyper("[x(1,2)]").unwrap();
        assert_eq!(
            expr.source(),
            &Hypercomposition::new(vec![1, 2, 0, 2, 1], SymmetryMode::Hyper).unwrap()
        );
        assert_eq!(
            expr.target(),
            &Hypercomposition::new(vec![2, 1, 0, 1, 2], SymmetryMode::Hyper).unwrap()
        );
    }

    #[test]
    fn parse_errors_locate_the_problem() {
        match parse_hyper("[m(1,1)") {
            Err(WebError::Parse { offset, message }) => {
                assert_eq!(offset, 7);
                assert!(message.contains("expected"), "{message}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse_hyper("[q(1,1)]") {
            Err(WebError::Parse { offset, message }) => {
                assert_eq!(offset, 1);
                assert!(message.contains("unknown generator"), "{message}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse_hyper("[ID(0)]") {
            Err(WebError::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse_hyper("[M(1,3)]") {
            Err(WebError::Parse { message, .. }) => {
                assert!(message.contains("even"), "{message}")
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse_hyper("[m(0,1)]") {
            Err(WebError::Parse { message, .. }) => {
                assert!(message.contains("positive"), "{message}")
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse_hyper("[id(1),M(1,2)]") {
            Err(WebError::Parse { message, .. }) => {
                assert!(message.contains("'|'"), "{message}")
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse_hyper("[m(1,1)] extra") {
            Err(WebError::Parse { offset, message }) => {
                assert_eq!(offset, 9);
                assert!(message.contains("trailing"), "{message}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        // The zero expression's printed form is documented as unparseable.
        assert!(parse_hyper("0").is_err());
    }

    #[test]
    fn plain_mode_rejects_axis_material() {
        assert!(parse_expr("[m(1,1)]", SymmetryMode::Plain).is_ok());
        match parse_expr("[M(1,2)]", SymmetryMode::Plain) {
            Err(WebError::Parse { message, .. }) => {
                assert!(message.contains("hyper"), "{message}")
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(parse_expr("[id(1)|ID(2)]", SymmetryMode::Plain).is_err());
    }

    #[test]
    fn interface_errors_surface_from_chains() {
        match parse_hyper("[m(1,1)] ; [m(1,1)]") {
            Err(WebError::InterfaceMismatch { layer, .. }) => assert_eq!(layer, 1),
            other => panic!("expected an interface mismatch, got {other:?}"),
        }
    }

    #[test]
    fn coefficients_parse_big_and_negative() {
        let expr = parse_hyper("123456789012345678901234567890*[ID(2)]").unwrap();
        assert_eq!(
            expr.terms()[0].0.to_string(),
            "123456789012345678901234567890"
        );
        let expr = parse_hyper("-7*[ID(2)] + [ID(2)]").unwrap();
        assert_eq!(expr.terms()[0].0, BigInt::from(-7));
        assert_eq!(expr.terms()[1].0, BigInt::from(1));
    }
}
