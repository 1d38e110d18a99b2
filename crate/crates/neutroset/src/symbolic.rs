use crate::error::{Error, Result};

/// The nine symbolic truth values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    OverTrue,
    True,
    UnderTrue,
    OverIndet,
    Indet,
    UnderIndet,
    OverFalse,
    False,
    UnderFalse,
}

use Symbol::*;

impl Symbol {
    pub const ALL: [Symbol; 9] = [
        OverTrue, True, UnderTrue, OverIndet, Indet, UnderIndet, OverFalse, False, UnderFalse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OverTrue => "TO",
            True => "T",
            UnderTrue => "TU",
            OverIndet => "IO",
            Indet => "I",
            UnderIndet => "IU",
            OverFalse => "FO",
            False => "F",
            UnderFalse => "FU",
        }
    }

    pub fn parse(s: &str) -> Result<Symbol> {
        let t = s.trim();
        Symbol::ALL
            .into_iter()
            .find(|sym| sym.name().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::Invalid(format!("unknown symbol {t:?}")))
    }
}

impl std::fmt::Display for Symbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Fixed negation involution: over <-> under within each letter, T <-> F, I fixed.
pub fn sym_neg(s: Symbol) -> Symbol {
    match s {
        OverTrue => UnderTrue,
        UnderTrue => OverTrue,
        OverIndet => UnderIndet,
        UnderIndet => OverIndet,
        OverFalse => UnderFalse,
        UnderFalse => OverFalse,
        True => False,
        False => True,
        Indet => Indet,
    }
}

/// A total order on the nine symbols, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicOrder {
    chain: [Symbol; 9],
}

impl SymbolicOrder {
    pub fn new(chain: [Symbol; 9]) -> Result<SymbolicOrder> {
        let mut seen = [false; 9];
        for s in chain {
            let idx = Symbol::ALL.iter().position(|&x| x == s).unwrap();
            if seen[idx] {
                return Err(Error::Invalid(format!("symbol {s} repeated in chain")));
            }
            seen[idx] = true;
        }
        Ok(SymbolicOrder { chain })
    }

    pub fn rank(&self, s: Symbol) -> usize {
        self.chain.iter().position(|&x| x == s).unwrap()
    }

    pub fn chain(&self) -> &[Symbol; 9] {
        &self.chain
    }

    pub fn min(&self, a: Symbol, b: Symbol) -> Symbol {
        if self.rank(a) <= self.rank(b) {
            a
        } else {
            b
        }
    }

    pub fn max(&self, a: Symbol, b: Symbol) -> Symbol {
        if self.rank(a) >= self.rank(b) {
            a
        } else {
            b
        }
    }
}

/// T_U < I_U < F_U < F < I < T < F_O < I_O < T_O.
pub fn default_order() -> SymbolicOrder {
    SymbolicOrder {
        chain: [
            UnderTrue, UnderIndet, UnderFalse, False, Indet, True, OverFalse, OverIndet, OverTrue,
        ],
    }
}

/// T_U < F_U < I_U < I < F < T < I_O < F_O < T_O.
pub fn alternate_order() -> SymbolicOrder {
    SymbolicOrder {
        chain: [
            UnderTrue, UnderFalse, UnderIndet, Indet, False, True, OverIndet, OverFalse, OverTrue,
        ],
    }
}

pub fn sym_and(a: Symbol, b: Symbol, order: &SymbolicOrder) -> Symbol {
    order.min(a, b)
}

pub fn sym_or(a: Symbol, b: Symbol, order: &SymbolicOrder) -> Symbol {
    order.max(a, b)
}

pub fn sym_implies(a: Symbol, b: Symbol, order: &SymbolicOrder) -> Symbol {
    sym_or(sym_neg(a), b, order)
}

/// Conjunction of the two implication values.
pub fn sym_equiv(p_to_q: Symbol, q_to_p: Symbol, order: &SymbolicOrder) -> Symbol {
    sym_and(p_to_q, q_to_p, order)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Leaf(Symbol),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

pub fn eval_formula(f: &Formula, order: &SymbolicOrder) -> Symbol {
    match f {
        Formula::Leaf(s) => *s,
        Formula::Not(x) => sym_neg(eval_formula(x, order)),
        Formula::And(x, y) => sym_and(eval_formula(x, order), eval_formula(y, order), order),
        Formula::Or(x, y) => sym_or(eval_formula(x, order), eval_formula(y, order), order),
        Formula::Implies(x, y) => {
            sym_implies(eval_formula(x, order), eval_formula(y, order), order)
        }
        Formula::Iff(x, y) => {
            let (p, q) = (eval_formula(x, order), eval_formula(y, order));
            sym_equiv(
                sym_implies(p, q, order),
                sym_implies(q, p, order),
                order,
            )
        }
    }
}

/// Does not(a and b) = not(a) or not(b) hold for all 81 pairs under `order`?
/// Returns the first failing pair otherwise.
pub fn de_morgan_report(order: &SymbolicOrder) -> (bool, Option<(Symbol, Symbol)>) {
    for a in Symbol::ALL {
        for b in Symbol::ALL {
            if sym_neg(sym_and(a, b, order)) != sym_or(sym_neg(a), sym_neg(b), order) {
                return (false, Some((a, b)));
            }
        }
    }
    (true, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negation_table() {
        assert_eq!(sym_neg(OverTrue), UnderTrue);
        assert_eq!(sym_neg(UnderTrue), OverTrue);
        assert_eq!(sym_neg(OverIndet), UnderIndet);
        assert_eq!(sym_neg(UnderIndet), OverIndet);
        assert_eq!(sym_neg(OverFalse), UnderFalse);
        assert_eq!(sym_neg(UnderFalse), OverFalse);
        assert_eq!(sym_neg(True), False);
        assert_eq!(sym_neg(False), True);
        assert_eq!(sym_neg(Indet), Indet);
        for s in Symbol::ALL {
            assert_eq!(sym_neg(sym_neg(s)), s);
        }
    }

    #[test]
    fn conjunction_rows() {
        let o = default_order();
        assert_eq!(sym_and(True, OverTrue, &o), True);
        assert_eq!(sym_and(Indet, False, &o), False);
        assert_eq!(sym_and(UnderFalse, OverFalse, &o), UnderFalse);
        assert_eq!(sym_and(UnderIndet, False, &o), UnderIndet);
        assert_eq!(sym_and(UnderTrue, OverFalse, &o), UnderTrue);
    }

    #[test]
    fn disjunction_rows() {
        let o = default_order();
        assert_eq!(sym_or(UnderTrue, False, &o), False);
        assert_eq!(sym_or(Indet, OverIndet, &o), OverIndet);
        assert_eq!(sym_or(True, False, &o), True);
        assert_eq!(sym_or(False, OverTrue, &o), OverTrue);
    }

    #[test]
    fn implication_rows() {
        let o = default_order();
        assert_eq!(sym_implies(OverIndet, False, &o), False);
        assert_eq!(sym_implies(True, OverTrue, &o), OverTrue);
        assert_eq!(sym_implies(UnderFalse, OverFalse, &o), OverFalse);
    }

    #[test]
    fn equivalence_by_hand() {
        let o = default_order();
        let p_to_q = sym_implies(True, OverTrue, &o);
        let q_to_p = sym_implies(OverTrue, True, &o);
        assert_eq!(p_to_q, OverTrue);
        assert_eq!(q_to_p, True);
        assert_eq!(sym_equiv(p_to_q, q_to_p, &o), True);
        assert_eq!(sym_equiv(OverTrue, OverTrue, &o), OverTrue);
        assert_eq!(sym_equiv(False, True, &o), False);
    }

    #[test]
    fn alternate_order_rows() {
        let alt = alternate_order();
        assert_eq!(sym_and(True, False, &alt), False);
        assert_eq!(sym_and(Indet, UnderIndet, &alt), UnderIndet);
        assert_eq!(sym_and(False, Indet, &alt), Indet);
        assert_eq!(sym_or(OverFalse, OverIndet, &alt), OverFalse);
    }

    #[test]
    fn formula_evaluation() {
        let o = default_order();
        let f = Formula::Not(Box::new(Formula::And(
            Box::new(Formula::Leaf(OverTrue)),
            Box::new(Formula::Leaf(False)),
        )));
        assert_eq!(eval_formula(&f, &o), True);
        assert_eq!(eval_formula(&Formula::Leaf(Indet), &o), Indet);
        let imp = Formula::Implies(
            Box::new(Formula::Leaf(OverIndet)),
            Box::new(Formula::Leaf(False)),
        );
        assert_eq!(eval_formula(&imp, &o), False);
    }

    #[test]
    fn lattice_laws_by_enumeration() {
        for order in [default_order(), alternate_order()] {
            for a in Symbol::ALL {
                assert_eq!(sym_and(a, a, &order), a);
                assert_eq!(sym_or(a, a, &order), a);
                for b in Symbol::ALL {
                    assert_eq!(sym_and(a, b, &order), sym_and(b, a, &order));
                    assert_eq!(sym_or(a, b, &order), sym_or(b, a, &order));
                    assert_eq!(
                        sym_implies(a, b, &order),
                        sym_or(sym_neg(a), b, &order)
                    );
                    assert!(order.rank(sym_and(a, b, &order)) <= order.rank(a));
                    assert!(order.rank(a) <= order.rank(sym_or(a, b, &order)));
                    for c in Symbol::ALL {
                        assert_eq!(
                            sym_and(sym_and(a, b, &order), c, &order),
                            sym_and(a, sym_and(b, c, &order), &order)
                        );
                        assert_eq!(
                            sym_or(sym_or(a, b, &order), c, &order),
                            sym_or(a, sym_or(b, c, &order), &order)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn symbol_parsing() {
        assert_eq!(Symbol::parse("TO").unwrap(), OverTrue);
        assert_eq!(Symbol::parse("fu").unwrap(), UnderFalse);
        assert_eq!(Symbol::parse("I").unwrap(), Indet);
        assert!(Symbol::parse("X").is_err());
    }

    #[test]
    fn order_validation() {
        assert!(SymbolicOrder::new([
            True, True, UnderTrue, OverIndet, Indet, UnderIndet, OverFalse, False, UnderFalse
        ])
        .is_err());
    }

    #[test]
    fn de_morgan_is_reported_not_assumed() {
        // Negation reverses the default chain exactly, so the law holds there;
        // on the alternate chain I sits off-center and the law breaks.
        let (holds, witness) = de_morgan_report(&default_order());
        assert!(holds);
        assert!(witness.is_none());

        let (holds, witness) = de_morgan_report(&alternate_order());
        assert!(!holds);
        assert!(witness.is_some());
    }
}
