//! Text syntax for symbolic formulas. Symbols TO, T, TU, IO, I, IU, FO, F, FU
//! (underscores allowed, case-insensitive); connectives !, &, |, ->, <->;
//! precedence ! > & > | > -> > <-> with a right-associative ->.

use neutroset::symbolic::{Formula, Symbol};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Sym(Symbol),
    Not,
    And,
    Or,
    Implies,
    Iff,
    Open,
    Close,
}

fn lex(input: &str) -> Result<Vec<Tok>, String> {
    let mut toks = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        match c {
            ' ' | '\t' | '\n' | '\r' => k += 1,
            '!' | '~' => {
                toks.push(Tok::Not);
                k += 1;
            }
            '&' => {
                toks.push(Tok::And);
                k += 1;
            }
            '|' => {
                toks.push(Tok::Or);
                k += 1;
            }
            '(' => {
                toks.push(Tok::Open);
                k += 1;
            }
            ')' => {
                toks.push(Tok::Close);
                k += 1;
            }
            '-' => {
                if chars.get(k + 1) == Some(&'>') {
                    toks.push(Tok::Implies);
                    k += 2;
                } else {
                    return Err(format!("stray '-' at position {k}"));
                }
            }
            '<' => {
                if chars.get(k + 1) == Some(&'-') && chars.get(k + 2) == Some(&'>') {
                    toks.push(Tok::Iff);
                    k += 3;
                } else {
                    return Err(format!("stray '<' at position {k}"));
                }
            }
            c if c.is_ascii_alphabetic() => {
                let start = k;
                while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                    k += 1;
                }
                let word: String = chars[start..k].iter().filter(|c| **c != '_').collect();
                let sym = Symbol::parse(&word)
                    .map_err(|_| format!("unknown symbol {:?} at position {start}",
                        chars[start..k].iter().collect::<String>()))?;
                toks.push(Tok::Sym(sym));
            }
            other => return Err(format!("unexpected character {other:?} at position {k}")),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn iff(&mut self) -> Result<Formula, String> {
        let mut left = self.implies()?;
        while self.eat(&Tok::Iff) {
            let right = self.implies()?;
            left = Formula::Iff(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn implies(&mut self) -> Result<Formula, String> {
        let left = self.or()?;
        if self.eat(&Tok::Implies) {
            let right = self.implies()?;
            return Ok(Formula::Implies(Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Formula, String> {
        let mut left = self.and()?;
        while self.eat(&Tok::Or) {
            let right = self.and()?;
            left = Formula::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Formula, String> {
        let mut left = self.unary()?;
        while self.eat(&Tok::And) {
            let right = self.unary()?;
            left = Formula::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, String> {
        if self.eat(&Tok::Not) {
            return Ok(Formula::Not(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, String> {
        match self.peek().cloned() {
            Some(Tok::Sym(s)) => {
                self.pos += 1;
                Ok(Formula::Leaf(s))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let inner = self.iff()?;
                if !self.eat(&Tok::Close) {
                    return Err("missing ')'".into());
                }
                Ok(inner)
            }
            other => Err(format!("expected a symbol or '(', got {other:?}")),
        }
    }
}

pub fn parse_formula(input: &str) -> Result<Formula, String> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err("empty formula".into());
    }
    let mut p = Parser { toks, pos: 0 };
    let f = p.iff()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing tokens after position {}", p.pos));
    }
    Ok(f)
}
