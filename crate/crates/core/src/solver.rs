//! A small complete SAT solver: unit propagation over two watched literals
//! and chronological backtracking. Branching always picks the lowest-index
//! unassigned variable and tries false first, so runs are deterministic.

use crate::cnf::{Clause, Literal};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Value {
    Unassigned,
    True,
    False,
}

struct Decision {
    trail_len: usize,
    literal: Literal,
    flipped: bool,
}

struct Dpll {
    clauses: Vec<Clause>,
    watches: Vec<Vec<usize>>,
    values: Vec<Value>,
    trail: Vec<Literal>,
    propagated: usize,
    decisions: Vec<Decision>,
}

fn code(l: Literal) -> usize {
    2 * l.var() as usize + usize::from(!l.is_positive())
}

impl Dpll {
    fn value(&self, l: Literal) -> Value {
        match self.values[l.var() as usize] {
            Value::Unassigned => Value::Unassigned,
            Value::True if l.is_positive() => Value::True,
            Value::False if !l.is_positive() => Value::True,
            _ => Value::False,
        }
    }

    fn assign(&mut self, l: Literal) {
        self.values[l.var() as usize] = if l.is_positive() {
            Value::True
        } else {
            Value::False
        };
        self.trail.push(l);
    }

    /// Returns false on conflict.
    fn propagate(&mut self) -> bool {
        while self.propagated < self.trail.len() {
            let falsified = !self.trail[self.propagated];
            self.propagated += 1;
            let watching = std::mem::take(&mut self.watches[code(falsified)]);
            let mut keep = Vec::with_capacity(watching.len());
            let mut conflict = false;
            let mut rest = watching.into_iter();
            for ci in rest.by_ref() {
                if self.clauses[ci][0] == falsified {
                    self.clauses[ci].swap(0, 1);
                }
                let other = self.clauses[ci][0];
                if self.value(other) == Value::True {
                    keep.push(ci);
                    continue;
                }
                let replacement = (2..self.clauses[ci].len())
                    .find(|&k| self.value(self.clauses[ci][k]) != Value::False);
                if let Some(k) = replacement {
                    self.clauses[ci].swap(1, k);
                    let new_watch = self.clauses[ci][1];
                    self.watches[code(new_watch)].push(ci);
                    continue;
                }
                keep.push(ci);
                match self.value(other) {
                    Value::False => {
                        conflict = true;
                        break;
                    }
                    Value::Unassigned => self.assign(other),
                    Value::True => unreachable!(),
                }
            }
            keep.extend(rest);
            self.watches[code(falsified)] = keep;
            if conflict {
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, len: usize) {
        for l in self.trail.drain(len..) {
            self.values[l.var() as usize] = Value::Unassigned;
        }
        self.propagated = self.propagated.min(len);
    }

    /// Flips the most recent unflipped decision. False when none is left.
    fn backtrack(&mut self) -> bool {
        while let Some(d) = self.decisions.pop() {
            self.undo_to(d.trail_len);
            if !d.flipped {
                let flipped = !d.literal;
                self.decisions.push(Decision {
                    trail_len: d.trail_len,
                    literal: flipped,
                    flipped: true,
                });
                self.assign(flipped);
                return true;
            }
        }
        false
    }
}

/// Searches for a model of `clauses` over variables `1..=n_vars`.
/// The model is indexed by `var - 1`.
pub fn solve_clauses(n_vars: usize, clauses: &[Clause]) -> Option<Vec<bool>> {
    let mut solver = Dpll {
        clauses: Vec::new(),
        watches: vec![Vec::new(); 2 * n_vars + 2],
        values: vec![Value::Unassigned; n_vars + 1],
        trail: Vec::new(),
        propagated: 0,
        decisions: Vec::new(),
    };

    let mut units = Vec::new();
    for clause in clauses {
        let mut c: Clause = Vec::with_capacity(clause.len());
        for &l in clause {
            assert!(
                (l.var() as usize) <= n_vars,
                "literal {l} outside 1..={n_vars}"
            );
            if !c.contains(&l) {
                c.push(l);
            }
        }
        if c.iter().any(|&l| c.contains(&!l)) {
            continue;
        }
        match c.len() {
            0 => return None,
            1 => units.push(c[0]),
            _ => {
                let ci = solver.clauses.len();
                solver.watches[code(c[0])].push(ci);
                solver.watches[code(c[1])].push(ci);
                solver.clauses.push(c);
            }
        }
    }
    for u in units {
        match solver.value(u) {
            Value::True => {}
            Value::False => return None,
            Value::Unassigned => solver.assign(u),
        }
    }

    let mut next_var = 1;
    loop {
        if !solver.propagate() {
            if !solver.backtrack() {
                return None;
            }
            next_var = 1;
            continue;
        }
        while next_var <= n_vars && solver.values[next_var] != Value::Unassigned {
            next_var += 1;
        }
        if next_var > n_vars {
            break;
        }
        let decision = Literal::neg(next_var as u32);
        solver.decisions.push(Decision {
            trail_len: solver.trail.len(),
            literal: decision,
            flipped: false,
        });
        solver.assign(decision);
    }
    Some(
        solver.values[1..]
            .iter()
            .map(|&v| v == Value::True)
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::{sat_oracle, Assignment, CnfFormula};
    use proptest::prelude::*;

    fn lits(c: &[i32]) -> Clause {
        c.iter()
            .map(|&v| Literal::from_dimacs(v).unwrap())
            .collect()
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(solve_clauses(0, &[]), Some(vec![]));
        assert_eq!(solve_clauses(2, &[]), Some(vec![false, false]));
        assert_eq!(solve_clauses(1, &[vec![]]), None);
        assert_eq!(solve_clauses(1, &[lits(&[1]), lits(&[-1])]), None);
        assert_eq!(solve_clauses(1, &[lits(&[1, -1])]), Some(vec![false]));
    }

    #[test]
    fn pigeonhole_three_into_two_is_unsat() {
        // p(i,h) = 2*i + h + 1 for pigeons 0..3, holes 0..2
        let p = |i: i32, h: i32| 2 * i + h + 1;
        let mut clauses = Vec::new();
        for i in 0..3 {
            clauses.push(lits(&[p(i, 0), p(i, 1)]));
        }
        for h in 0..2 {
            for i in 0..3 {
                for j in i + 1..3 {
                    clauses.push(lits(&[-p(i, h), -p(j, h)]));
                }
            }
        }
        assert_eq!(solve_clauses(6, &clauses), None);
    }

    #[test]
    fn false_first_branching() {
        // any model works; false-first on x1 then x2 yields x1=F, x2=T
        let m = solve_clauses(2, &[lits(&[1, 2])]).unwrap();
        assert_eq!(m, vec![false, true]);
    }

    fn arb_formula() -> impl Strategy<Value = (u32, Vec<Vec<i32>>)> {
        (1u32..=7).prop_flat_map(|n| {
            let lit = (1..=n as i32, any::<bool>()).prop_map(|(v, s)| if s { v } else { -v });
            (
                Just(n),
                prop::collection::vec(prop::collection::vec(lit, 1..=4), 0..=20),
            )
        })
    }

    proptest! {
        #[test]
        fn agrees_with_exhaustive_oracle((n, raw) in arb_formula()) {
            let refs: Vec<&[i32]> = raw.iter().map(Vec::as_slice).collect();
            let f = CnfFormula::from_dimacs_clauses(n, &refs).unwrap();
            let expected = sat_oracle(&f, 24).unwrap();
            let got = solve_clauses(n as usize, f.clauses());
            prop_assert_eq!(expected.is_some(), got.is_some());
            if let Some(model) = got {
                prop_assert!(Assignment::from_values(model).satisfies(&f));
            }
        }
    }
}
