//! The group-spec language:
//!
//! ```text
//! spec   := factor { ("x" | "×") factor }
//! factor := "C" int ["^" int] | "Heis" int | "Ex(" int ")" | "file:" path
//! ```
//!
//! Whitespace around separators is ignored. A `file:` path runs to the next
//! whitespace character, so a product following it needs a space before `x`.

use std::fmt;
use std::path::PathBuf;

use super::numth::is_prime;
use super::{GroupError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Cyclic(usize),
    CyclicPower(usize, usize),
    Heisenberg(usize),
    ExampleFamily(usize),
    CayleyFile(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub factors: Vec<Factor>,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Cyclic(n) => write!(f, "C{n}"),
            Factor::CyclicPower(n, k) => write!(f, "C{n}^{k}"),
            Factor::Heisenberg(p) => write!(f, "Heis{p}"),
            Factor::ExampleFamily(d) => write!(f, "Ex({d})"),
            Factor::CayleyFile(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}

pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty group spec"));
    }
    let mut factors = vec![p.factor()?];
    loop {
        p.skip_ws();
        if p.at_end() {
            break;
        }
        match p.peek() {
            Some('x') | Some('×') => {
                p.pos += 1;
                p.skip_ws();
                factors.push(p.factor()?);
            }
            _ => return Err(p.error("expected 'x' between factors")),
        }
    }
    Ok(GroupSpec { factors })
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, msg: &str) -> GroupError {
        GroupError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn eat(&mut self, word: &str) -> bool {
        let w: Vec<char> = word.chars().collect();
        if self.chars[self.pos..].starts_with(&w) {
            self.pos += w.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| GroupError::Syntax {
            pos: start,
            msg: "integer out of range".into(),
        })
    }

    fn positive(&mut self, what: &str) -> Result<usize> {
        let start = self.pos;
        let v = self.int()?;
        if v == 0 {
            return Err(GroupError::Syntax {
                pos: start,
                msg: format!("{what} must be at least 1"),
            });
        }
        Ok(v)
    }

    fn factor(&mut self) -> Result<Factor> {
        if self.eat("Heis") {
            let start = self.pos;
            let p = self.int()?;
            if p % 2 == 0 || !is_prime(p as u64) {
                return Err(GroupError::Syntax {
                    pos: start,
                    msg: format!("Heisenberg parameter {p} is not an odd prime"),
                });
            }
            Ok(Factor::Heisenberg(p))
        } else if self.eat("Ex(") {
            let d = self.positive("family index")?;
            if !self.eat(")") {
                return Err(self.error("expected ')'"));
            }
            Ok(Factor::ExampleFamily(d))
        } else if self.eat("file:") {
            let start = self.pos;
            while self.peek().is_some_and(|c| !c.is_whitespace()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.error("expected a path"));
            }
            let path: String = self.chars[start..self.pos].iter().collect();
            Ok(Factor::CayleyFile(PathBuf::from(path)))
        } else if self.eat("C") {
            let n = self.positive("cyclic order")?;
            if self.eat("^") {
                let k = self.positive("exponent")?;
                Ok(Factor::CyclicPower(n, k))
            } else {
                Ok(Factor::Cyclic(n))
            }
        } else {
            Err(self.error("expected a factor (C, Heis, Ex( or file:)"))
        }
    }
}
