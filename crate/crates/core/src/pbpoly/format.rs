//! Line-oriented text format for polynomials.
//!
//! ```text
//! # comment
//! -5 x1 w1
//! 3 x1 x2
//! 7 w1
//! 4
//! ```
//!
//! Each line is `<coeff> <var>*`; a bare coefficient is the constant term.
//! `#` starts a comment and blank lines are ignored. Repeated monomials are
//! summed on input. Output lists terms in canonical (degree, lexicographic)
//! order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::pbpoly::{Monomial, Polynomial, VarId};

pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let mut p = Polynomial::zero();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = line.split_whitespace();
        let Some(coeff_tok) = tokens.next() else {
            continue;
        };
        let coeff: i64 = coeff_tok
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad coefficient `{coeff_tok}`")))?;
        let vars = tokens
            .map(|t| t.parse::<VarId>().map_err(|e| Error::parse(line_no, e)))
            .collect::<Result<Vec<_>>>()?;
        p.add_term(Monomial::new(vars), coeff)?;
    }
    Ok(p)
}

pub fn write_polynomial(p: &Polynomial) -> String {
    let mut out = String::new();
    for (m, c) in p.terms() {
        write!(out, "{c}").unwrap();
        for v in m.vars() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// The `# aux: w<first>..w<last>` sidecar line for a list of auxiliaries.
pub fn aux_sidecar(aux: &[VarId]) -> String {
    match (aux.first(), aux.last()) {
        (Some(first), Some(_)) if aux.len() == 1 => format!("# aux: {first}\n"),
        (Some(first), Some(last)) => format!("# aux: {first}..{last}\n"),
        _ => "# aux: none\n".to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_comments_constants_and_repeats() {
        let text = "# header\n\n-5 x1 w1\n3 x1 x2 # trailing\n4\n2 x2 x1\n";
        let p = parse_polynomial(text).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff(&Monomial::one()), 4);
        let x1x2 = Monomial::new([VarId::original(1), VarId::original(2)]);
        assert_eq!(p.coeff(&x1x2), 5);
        let x1w1 = Monomial::new([VarId::original(1), VarId::auxiliary(1)]);
        assert_eq!(p.coeff(&x1w1), -5);
    }

    #[test]
    fn writes_in_canonical_order() {
        let p = parse_polynomial("1 x1 x2 x3\n-2 w1\n5\n3 x0 x9\n1 x4\n").unwrap();
        assert_eq!(
            write_polynomial(&p),
            "5\n1 x4\n-2 w1\n3 x0 x9\n1 x1 x2 x3\n"
        );
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_polynomial("1 x1\n\nfoo x2\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "bad coefficient `foo`".into()
            }
        );
        assert!(matches!(
            parse_polynomial("1 y2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn sidecar_forms() {
        assert_eq!(aux_sidecar(&[]), "# aux: none\n");
        assert_eq!(aux_sidecar(&[VarId::auxiliary(1)]), "# aux: w1\n");
        assert_eq!(
            aux_sidecar(&[
                VarId::auxiliary(1),
                VarId::auxiliary(2),
                VarId::auxiliary(3)
            ]),
            "# aux: w1..w3\n"
        );
    }

    fn arb_var() -> impl Strategy<Value = VarId> {
        prop_oneof![
            (0u32..12).prop_map(VarId::original),
            (1u32..6).prop_map(VarId::auxiliary),
        ]
    }

    proptest! {
        #[test]
        fn write_then_parse_round_trips(
            terms in prop::collection::vec((prop::collection::vec(arb_var(), 0..5), -50i64..50), 0..20)
        ) {
            let p = Polynomial::from_terms(terms.into_iter().map(|(v, c)| (Monomial::new(v), c))).unwrap();
            prop_assert_eq!(parse_polynomial(&write_polynomial(&p)).unwrap(), p);
        }
    }
}
