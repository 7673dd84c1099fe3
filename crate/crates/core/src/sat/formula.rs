use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A monotone NAE formula: every clause is a set of `k` distinct
/// variables, satisfied when it holds both a true and a false one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaeFormula {
    num_vars: usize,
    k: usize,
    clauses: Vec<Vec<usize>>,
}

impl NaeFormula {
    /// Variables are 0-based here; the text format is 1-based.
    pub fn new(num_vars: usize, k: usize, clauses: Vec<Vec<usize>>) -> Result<Self> {
        for (c, clause) in clauses.iter().enumerate() {
            if clause.len() != k {
                return Err(Error::MalformedFormula(format!(
                    "clause {} has {} literals, expected {k}",
                    c + 1,
                    clause.len()
                )));
            }
            for (i, &x) in clause.iter().enumerate() {
                if x >= num_vars {
                    return Err(Error::MalformedFormula(format!(
                        "clause {} uses variable {} of {num_vars}",
                        c + 1,
                        x + 1
                    )));
                }
                if clause[..i].contains(&x) {
                    return Err(Error::MalformedFormula(format!(
                        "clause {} repeats variable {}",
                        c + 1,
                        x + 1
                    )));
                }
            }
        }
        Ok(NaeFormula {
            num_vars,
            k,
            clauses,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn arity(&self) -> usize {
        self.k
    }

    pub fn clauses(&self) -> &[Vec<usize>] {
        &self.clauses
    }
}

impl fmt::Display for NaeFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nae {} {} {}", self.k, self.num_vars, self.clauses.len())?;
        for clause in &self.clauses {
            let parts: Vec<String> = clause.iter().map(|x| (x + 1).to_string()).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for NaeFormula {
    type Err = Error;

    /// Header `nae k n m`, then `m` lines of `k` 1-based variable indices.
    /// Blank lines and `#` comments are skipped.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |m: String| Error::MalformedFormula(m);
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| bad("missing header".into()))?;
        let mut tokens = header.split_whitespace();
        if tokens.next() != Some("nae") {
            return Err(bad(format!("header must start with `nae`, got {header:?}")));
        }
        let nums: Vec<usize> = tokens
            .map(|t| t.parse().map_err(|_| bad(format!("bad header token {t:?}"))))
            .collect::<Result<_>>()?;
        let [k, n, m] = nums[..] else {
            return Err(bad(format!("header needs `nae k n m`, got {header:?}")));
        };
        let mut clauses = Vec::with_capacity(m);
        for line in lines {
            let clause: Vec<usize> = line
                .split_whitespace()
                .map(|t| match t.parse::<usize>() {
                    Ok(x) if x >= 1 => Ok(x - 1),
                    _ => Err(bad(format!("bad variable {t:?}"))),
                })
                .collect::<Result<_>>()?;
            clauses.push(clause);
        }
        if clauses.len() != m {
            return Err(bad(format!("header promises {m} clauses, found {}", clauses.len())));
        }
        NaeFormula::new(n, k, clauses)
    }
}

/// Truth values, one per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    /// Variable `i` is true iff bit `i` of `bits` is set.
    pub fn from_bits(num_vars: usize, bits: u64) -> Self {
        Assignment((0..num_vars).map(|i| bits >> i & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "T" } else { "F" })?;
        }
        Ok(())
    }
}

impl FromStr for Assignment {
    type Err = Error;

    /// A string over `T`/`F` (or `1`/`0`).
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'T' | 't' | '1' => Ok(true),
                'F' | 'f' | '0' => Ok(false),
                _ => Err(Error::InvalidParameter(format!("bad truth value {c:?}"))),
            })
            .collect::<Result<_>>()
            .map(Assignment)
    }
}

pub fn nae_eval(f: &NaeFormula, a: &Assignment) -> Result<bool> {
    if a.len() != f.num_vars {
        return Err(Error::SizeMismatch {
            expected: f.num_vars,
            got: a.len(),
        });
    }
    Ok(f.clauses.iter().all(|c| {
        let trues = c.iter().filter(|&&x| a.0[x]).count();
        trues > 0 && trues < c.len()
    }))
}

/// Raises the arity by one: with `k` fresh variables, each clause is
/// copied once per fresh variable with that variable appended, and one
/// clause of all fresh variables is added.
pub fn pad_nae(f: &NaeFormula) -> Result<NaeFormula> {
    let k = f.k + 1;
    if k < 4 {
        return Err(Error::InvalidParameter(format!(
            "padding needs arity at least 3, got {}",
            f.k
        )));
    }
    let fresh: Vec<usize> = (f.num_vars..f.num_vars + k).collect();
    let mut clauses = Vec::with_capacity(k * f.clauses.len() + 1);
    for c in &f.clauses {
        for &a in &fresh {
            let mut d = c.clone();
            d.push(a);
            clauses.push(d);
        }
    }
    clauses.push(fresh);
    NaeFormula::new(f.num_vars + k, k, clauses)
}
