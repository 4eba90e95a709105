//! CNF formulas, DIMACS I/O and an exhaustive satisfiability oracle.

use std::fmt;
use std::num::NonZeroI32;

use crate::{Error, Result};

/// A propositional literal, stored in DIMACS form: `v` or `-v`, `v >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal(NonZeroI32);

impl Literal {
    /// # Panics
    /// If `var` is zero or does not fit a DIMACS integer.
    pub fn new(var: u32, positive: bool) -> Self {
        let v = i32::try_from(var).expect("variable index overflows i32");
        let v = NonZeroI32::new(v).expect("variables are numbered from 1");
        Literal(if positive { v } else { -v })
    }

    pub fn pos(var: u32) -> Self {
        Self::new(var, true)
    }

    pub fn neg(var: u32) -> Self {
        Self::new(var, false)
    }

    pub fn from_dimacs(value: i32) -> Option<Self> {
        NonZeroI32::new(value).map(Literal)
    }

    pub fn to_dimacs(self) -> i32 {
        self.0.get()
    }

    pub fn var(self) -> u32 {
        self.0.get().unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0.get() > 0
    }

    pub fn negate(self) -> Self {
        Literal(-self.0)
    }
}

impl std::ops::Not for Literal {
    type Output = Literal;
    fn not(self) -> Literal {
        self.negate()
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A clause: literals in first-occurrence order, duplicates removed.
pub type Clause = Vec<Literal>;

/// A CNF formula over variables `1..=n_vars`. Clause order is significant:
/// clause `i` becomes argument `c<i+1>` in the reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    n_vars: u32,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    /// Builds a formula, deduplicating literals within each clause. Empty
    /// clauses and out-of-range variables are rejected.
    pub fn new(n_vars: u32, clauses: impl IntoIterator<Item = Clause>) -> Result<Self> {
        let mut out = Vec::new();
        for (i, clause) in clauses.into_iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::Structural(format!("clause {i} is empty")));
            }
            if let Some(l) = clause.iter().find(|l| l.var() > n_vars) {
                return Err(Error::Structural(format!(
                    "clause {i} mentions variable {} but the formula has {n_vars}",
                    l.var()
                )));
            }
            out.push(dedup(clause));
        }
        Ok(CnfFormula {
            n_vars,
            clauses: out,
        })
    }

    /// Convenience constructor from DIMACS integers.
    pub fn from_dimacs_clauses(n_vars: u32, clauses: &[&[i32]]) -> Result<Self> {
        let mut built = Vec::with_capacity(clauses.len());
        for c in clauses {
            let mut clause = Vec::with_capacity(c.len());
            for &v in *c {
                clause.push(
                    Literal::from_dimacs(v)
                        .ok_or_else(|| Error::Structural("literal 0 inside a clause".into()))?,
                );
            }
            built.push(clause);
        }
        Self::new(n_vars, built)
    }

    pub fn n_vars(&self) -> u32 {
        self.n_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn n_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn n_literal_occurrences(&self) -> usize {
        self.clauses.iter().map(Vec::len).sum()
    }

    /// Index of the first clause containing both `x` and `¬x`.
    pub fn first_tautological_clause(&self) -> Option<usize> {
        self.clauses
            .iter()
            .position(|c| c.iter().any(|&l| c.contains(&!l)))
    }

    pub fn has_tautological_clause(&self) -> bool {
        self.first_tautological_clause().is_some()
    }
}

fn dedup(clause: Clause) -> Clause {
    let mut out: Clause = Vec::with_capacity(clause.len());
    for l in clause {
        if !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

/// A total truth assignment over `1..=n_vars`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn all_false(n_vars: u32) -> Self {
        Assignment {
            values: vec![false; n_vars as usize],
        }
    }

    pub fn from_values(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn n_vars(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn value(&self, var: u32) -> bool {
        self.values[var as usize - 1]
    }

    pub fn set(&mut self, var: u32, value: bool) {
        self.values[var as usize - 1] = value;
    }

    pub fn satisfies_literal(&self, l: Literal) -> bool {
        self.value(l.var()) == l.is_positive()
    }

    pub fn satisfies(&self, f: &CnfFormula) -> bool {
        f.clauses()
            .iter()
            .all(|c| c.iter().any(|&l| self.satisfies_literal(l)))
    }

    /// The variables set to true.
    pub fn true_vars(&self) -> impl Iterator<Item = u32> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v)
            .map(|(i, _)| i as u32 + 1)
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lits: Vec<i32> = (1..=self.n_vars())
            .map(|v| if self.value(v) { v as i32 } else { -(v as i32) })
            .collect();
        write!(f, "Assignment{lits:?}")
    }
}

/// Exhaustive search in lexicographic order over `(x1, …, xn)` with false
/// before true. Returns the first model, or `None` if there is none.
pub fn sat_oracle(f: &CnfFormula, max_vars: usize) -> Result<Option<Assignment>> {
    let n = f.n_vars() as usize;
    if n > max_vars {
        return Err(Error::Capacity {
            what: "formula variable count",
            size: n,
            cap: max_vars,
        });
    }
    // x1 is the most significant bit of the counter
    for mask in 0u64..(1u64 << n) {
        let values = (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect();
        let candidate = Assignment::from_values(values);
        if candidate.satisfies(f) {
            return Ok(Some(candidate));
        }
    }
    Ok(None)
}

/// Parses DIMACS CNF. Comment lines start with `c`; a line starting with `%`
/// ends the input. CRLF line endings are accepted.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(u32, usize, usize)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut current: Clause = Vec::new();
    let mut current_line = 0;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::dimacs(lineno, "duplicate problem line"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(Error::dimacs(
                    lineno,
                    "expected problem line `p cnf <vars> <clauses>`",
                ));
            }
            let vars = fields[2]
                .parse::<u32>()
                .ok()
                .filter(|&v| v <= i32::MAX as u32)
                .ok_or_else(|| Error::dimacs(lineno, "bad variable count"))?;
            let n_clauses = fields[3]
                .parse::<usize>()
                .map_err(|_| Error::dimacs(lineno, "bad clause count"))?;
            header = Some((vars, n_clauses, lineno));
            continue;
        }
        let Some((n_vars, _, _)) = header else {
            return Err(Error::dimacs(lineno, "clause before problem line"));
        };
        for token in line.split_whitespace() {
            let value: i32 = token
                .parse()
                .map_err(|_| Error::dimacs(lineno, format!("bad literal {token:?}")))?;
            if value == 0 {
                if current.is_empty() {
                    return Err(Error::dimacs(lineno, "empty clause"));
                }
                clauses.push(dedup(std::mem::take(&mut current)));
                continue;
            }
            if value.unsigned_abs() > n_vars {
                return Err(Error::dimacs(
                    lineno,
                    format!("literal {value} out of range for {n_vars} variables"),
                ));
            }
            if current.is_empty() {
                current_line = lineno;
            }
            current.push(Literal::from_dimacs(value).expect("nonzero"));
        }
    }

    let Some((n_vars, declared, header_line)) = header else {
        return Err(Error::dimacs(last_line.max(1), "missing problem line"));
    };
    if !current.is_empty() {
        return Err(Error::dimacs(current_line, "clause not terminated by 0"));
    }
    if clauses.len() != declared {
        return Err(Error::dimacs(
            header_line,
            format!(
                "problem line declares {declared} clauses, found {}",
                clauses.len()
            ),
        ));
    }
    Ok(CnfFormula { n_vars, clauses })
}

/// Writes DIMACS with LF line endings, one clause per line.
pub fn emit_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.n_vars(), f.n_clauses());
    write_clauses(&mut out, f.clauses());
    out
}

pub(crate) fn write_clauses(out: &mut String, clauses: &[Clause]) {
    use std::fmt::Write;
    for c in clauses {
        for l in c {
            let _ = write!(out, "{l} ");
        }
        out.push_str("0\n");
    }
}
