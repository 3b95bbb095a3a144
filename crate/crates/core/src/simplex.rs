//! Exact rational simplex for small feasibility and minimisation problems in
//! standard equality form `A x = b`, `x >= 0`.
//!
//! Pivoting uses Bland's rule, so the method terminates without any
//! anti-cycling perturbation. Everything is computed over `BigRational`;
//! there is no floating point anywhere in the pipeline.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// An exact linear program `A x = b`, `x >= 0` over the rationals.
#[derive(Clone, Debug)]
pub struct Lp {
    pub rows: Vec<Vec<BigRational>>,
    pub rhs: Vec<BigRational>,
}

/// Outcome of a phase-1 feasibility run.
pub enum Feasibility {
    /// A feasible point.
    Feasible(Vec<BigRational>),
    /// A Farkas certificate `y`: `y . b > 0` and `y^T A_j <= 0` for every
    /// column `j`, proving that no non-negative solution exists.
    Infeasible(Vec<BigRational>),
}

struct Tableau {
    /// m x (n + m + 1) matrix; the last column is the rhs and columns
    /// `n..n+m` hold the artificial variables.
    t: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    n: usize,
    m: usize,
}

impl Tableau {
    fn new(lp: &Lp) -> Tableau {
        let m = lp.rows.len();
        let n = lp.rows.first().map(|r| r.len()).unwrap_or(0);
        let mut t = Vec::with_capacity(m);
        for i in 0..m {
            let mut row: Vec<BigRational> = lp.rows[i].clone();
            row.resize(n + m + 1, BigRational::zero());
            row[n + m] = lp.rhs[i].clone();
            if row[n + m].is_negative() {
                for c in row.iter_mut() {
                    *c = -c.clone();
                }
            }
            row[n + i] = BigRational::one();
            t.push(row);
        }
        let basis = (n..n + m).collect();
        Tableau { t, basis, n, m }
    }

    fn rhs(&self, r: usize) -> &BigRational {
        &self.t[r][self.n + self.m]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let lead = self.t[row][col].clone();
        for c in self.t[row].iter_mut() {
            *c = &*c / &lead;
        }
        for r in 0..self.m {
            if r != row && !self.t[r][col].is_zero() {
                let factor = self.t[r][col].clone();
                for c in 0..self.t[r].len() {
                    let delta = &factor * &self.t[row][c];
                    self.t[r][c] = &self.t[r][c] - delta;
                }
            }
        }
        self.basis[row] = col;
    }

    fn reduced_costs(&self, cost: &[BigRational]) -> (Vec<BigRational>, BigRational) {
        let mut reduced = cost.to_vec();
        let mut obj = BigRational::zero();
        for r in 0..self.m {
            let cb = cost[self.basis[r]].clone();
            if cb.is_zero() {
                continue;
            }
            obj += &cb * self.rhs(r);
            for j in 0..self.n + self.m {
                let delta = &cb * &self.t[r][j];
                reduced[j] = &reduced[j] - delta;
            }
        }
        (reduced, obj)
    }

    /// Minimise `cost`, only letting columns `< enter_limit` enter the basis.
    /// Returns the final reduced-cost row and objective value.
    fn minimize(&mut self, cost: &[BigRational], enter_limit: usize) -> (Vec<BigRational>, BigRational) {
        loop {
            let (reduced, obj) = self.reduced_costs(cost);
            // Bland: smallest-index improving column.
            let Some(col) = (0..enter_limit).find(|&j| reduced[j].is_negative()) else {
                return (reduced, obj);
            };
            // Ratio test, ties broken by smallest basis variable index.
            let mut leave: Option<usize> = None;
            let mut best: Option<BigRational> = None;
            for r in 0..self.m {
                if self.t[r][col].is_positive() {
                    let ratio = self.rhs(r) / &self.t[r][col];
                    let better = match &best {
                        None => true,
                        Some(b) => {
                            ratio < *b
                                || (ratio == *b && self.basis[r] < self.basis[leave.unwrap()])
                        }
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(r);
                    }
                }
            }
            let Some(row) = leave else {
                // Unbounded direction: stop at the current vertex. Phase 1
                // is always bounded and the callers' phase-2 objectives are
                // bounded below, so this branch is defensive only.
                return (reduced, obj);
            };
            self.pivot(row, col);
        }
    }

    /// Pivot zero-valued artificial variables out of the basis where an
    /// original column is available; rows that cannot be pivoted are zero on
    /// all original columns and stay inert.
    fn expel_artificials(&mut self) {
        for r in 0..self.m {
            if self.basis[r] >= self.n {
                if let Some(col) = (0..self.n).find(|&j| !self.t[r][j].is_zero()) {
                    self.pivot(r, col);
                }
            }
        }
    }

    fn solution(&self) -> Vec<BigRational> {
        let mut x = vec![BigRational::zero(); self.n];
        for r in 0..self.m {
            if self.basis[r] < self.n {
                x[self.basis[r]] = self.rhs(r).clone();
            }
        }
        x
    }
}

/// Runs phase 1; on infeasibility returns the Farkas vector for the
/// sign-normalised system.
fn phase1(tab: &mut Tableau) -> Option<Vec<BigRational>> {
    let mut cost = vec![BigRational::zero(); tab.n + tab.m];
    for j in tab.n..tab.n + tab.m {
        cost[j] = BigRational::one();
    }
    let (reduced, obj) = tab.minimize(&cost, tab.n + tab.m);
    if obj.is_zero() {
        None
    } else {
        // Artificial column i has cost 1 and column e_i, so its reduced cost
        // is 1 - y_i; recover the simplex multipliers y from it.
        let y: Vec<BigRational> = (0..tab.m)
            .map(|i| BigRational::one() - reduced[tab.n + i].clone())
            .collect();
        Some(y)
    }
}

/// Decide feasibility of `lp`; returns a feasible point or a Farkas
/// certificate of infeasibility.
pub fn feasibility(lp: &Lp) -> Feasibility {
    let mut tab = Tableau::new(lp);
    let flipped: Vec<bool> = lp.rhs.iter().map(|b| b.is_negative()).collect();
    match phase1(&mut tab) {
        None => Feasibility::Feasible(tab.solution()),
        Some(mut y) => {
            // Undo the row sign normalisation so y certifies the original rows.
            for (i, f) in flipped.iter().enumerate() {
                if *f {
                    y[i] = -y[i].clone();
                }
            }
            Feasibility::Infeasible(y)
        }
    }
}

/// Minimise `objective . x` subject to `lp`; `None` when infeasible.
/// The objective must be bounded below on the feasible region.
pub fn minimize(lp: &Lp, objective: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut tab = Tableau::new(lp);
    if phase1(&mut tab).is_some() {
        return None;
    }
    tab.expel_artificials();
    let mut cost = vec![BigRational::zero(); tab.n + tab.m];
    cost[..tab.n].clone_from_slice(objective);
    let limit = tab.n;
    tab.minimize(&cost, limit);
    Some(tab.solution())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feasible_system() {
        // x1 + x2 = 2, x1 - x2 = 0 -> x = (1, 1)
        let lp = Lp {
            rows: vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]],
            rhs: vec![rat(2), rat(0)],
        };
        match feasibility(&lp) {
            Feasibility::Feasible(x) => assert_eq!(x, vec![rat(1), rat(1)]),
            Feasibility::Infeasible(_) => panic!("expected feasible"),
        }
    }

    #[test]
    fn infeasible_with_farkas() {
        // x1 + x2 = -1 has no non-negative solution.
        let lp = Lp {
            rows: vec![vec![rat(1), rat(1)]],
            rhs: vec![rat(-1)],
        };
        match feasibility(&lp) {
            Feasibility::Feasible(_) => panic!("expected infeasible"),
            Feasibility::Infeasible(y) => {
                let yb = &y[0] * rat(-1);
                assert!(yb.is_positive());
                assert!(!(&y[0] * rat(1)).is_positive());
            }
        }
    }

    #[test]
    fn minimization() {
        // min x1 + x2 s.t. x1 + 2 x2 = 4 -> x = (0, 2)
        let lp = Lp {
            rows: vec![vec![rat(1), rat(2)]],
            rhs: vec![rat(4)],
        };
        let x = minimize(&lp, &[rat(1), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(0), rat(2)]);
    }

    #[test]
    fn minimization_with_degenerate_artificials() {
        // Redundant constraint pair keeps an artificial basic at zero.
        let lp = Lp {
            rows: vec![
                vec![rat(1), rat(1)],
                vec![rat(2), rat(2)],
                vec![rat(1), rat(-1)],
            ],
            rhs: vec![rat(2), rat(4), rat(0)],
        };
        let x = minimize(&lp, &[rat(3), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);
    }
}
