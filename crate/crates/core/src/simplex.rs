//! Dense bounded-variable primal simplex, maximizing over
//! `{x : rows a*x <= b, lower <= x <= upper}`.
//!
//! Two phases: infeasible starts get artificial variables driven to zero
//! first. Entering variables follow the largest-reduced-cost rule until a
//! degenerate streak triggers Bland's anti-cycling rule. Failure to finish
//! within the iteration cap is reported as an error, never silently.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimplexError {
    #[error("simplex iteration cap exceeded after {0} pivots")]
    IterationLimit(usize),
    #[error("LP is unbounded")]
    Unbounded,
}

#[derive(Clone, Debug)]
pub struct LinearProgram {
    /// Objective coefficients (maximized), one per structural variable.
    pub objective: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    rows: Vec<(Vec<(usize, f64)>, f64)>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { value: f64, point: Vec<f64> },
    Infeasible,
}

const FEAS_TOL: f64 = 1e-9;
const COST_TOL: f64 = 1e-9;
const PIVOT_TOL: f64 = 1e-9;

impl LinearProgram {
    pub fn new(objective: Vec<f64>, lower: Vec<f64>, upper: Vec<f64>) -> Self {
        assert_eq!(objective.len(), lower.len());
        assert_eq!(objective.len(), upper.len());
        assert!(lower
            .iter()
            .zip(&upper)
            .all(|(l, u)| l.is_finite() && l <= u));
        LinearProgram { objective, lower, upper, rows: Vec::new() }
    }

    /// Add a constraint `sum coeffs * x <= rhs`.
    pub fn add_row(&mut self, coeffs: Vec<(usize, f64)>, rhs: f64) {
        debug_assert!(coeffs.iter().all(|&(j, _)| j < self.objective.len()));
        self.rows.push((coeffs, rhs));
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum VarState {
    Basic(usize),
    AtLower,
    AtUpper,
}

struct Tableau {
    cols: usize,
    n_struct: usize,
    t: Vec<Vec<f64>>,
    beta: Vec<f64>,
    cost: Vec<f64>,
    reduced: Vec<f64>,
    lower: Vec<f64>,
    upper: Vec<f64>,
    basis: Vec<usize>,
    state: Vec<VarState>,
    degenerate_streak: usize,
    pivots: usize,
}

pub fn solve(lp: &LinearProgram) -> Result<LpOutcome, SimplexError> {
    let n = lp.objective.len();
    let r = lp.rows.len();
    let cols = n + r;

    // Columns: structural variables then one slack per row.
    let mut t = vec![vec![0.0; cols]; r];
    let mut lower = lp.lower.clone();
    let mut upper = lp.upper.clone();
    for (i, (coeffs, _)) in lp.rows.iter().enumerate() {
        for &(j, a) in coeffs {
            t[i][j] += a;
        }
        t[i][n + i] = 1.0;
        lower.push(0.0);
        upper.push(f64::INFINITY);
    }

    // Start: structural variables at their lower bound, slacks basic.
    let mut state: Vec<VarState> = (0..cols)
        .map(|j| if j < n { VarState::AtLower } else { VarState::Basic(j - n) })
        .collect();
    let mut basis: Vec<usize> = (0..r).map(|i| n + i).collect();
    let mut beta: Vec<f64> = lp
        .rows
        .iter()
        .map(|(coeffs, rhs)| {
            rhs - coeffs
                .iter()
                .map(|&(j, a)| a * lp.lower[j])
                .sum::<f64>()
        })
        .collect();

    let needs_phase1 = beta.iter().any(|&b| b < -FEAS_TOL);
    if needs_phase1 {
        // Append one artificial column per infeasible row; the artificial
        // enters the basis with a positive value.
        let art_cols: Vec<usize> =
            (0..r).filter(|&i| beta[i] < -FEAS_TOL).collect();
        let total = cols + art_cols.len();
        for row in t.iter_mut() {
            row.resize(total, 0.0);
        }
        let mut cost = vec![0.0; total];
        for (k, &i) in art_cols.iter().enumerate() {
            let col = cols + k;
            t[i][col] = -1.0;
            // Normalize the new basic column to identity: the artificial
            // enters with pivot -1, so the whole row flips sign.
            for entry in t[i].iter_mut() {
                *entry = -*entry;
            }
            lower.push(0.0);
            upper.push(f64::INFINITY);
            cost[col] = -1.0;
            // Slack leaves the basis to its lower bound.
            state[basis[i]] = VarState::AtLower;
            basis[i] = col;
            state.push(VarState::Basic(i));
            beta[i] = -beta[i];
        }
        let mut tab = Tableau {
            cols: total,
            n_struct: n,
            t,
            beta,
            cost,
            reduced: Vec::new(),
            lower,
            upper,
            basis,
            state,
            degenerate_streak: 0,
            pivots: 0,
        };
        tab.recompute_reduced();
        tab.run()?;
        let infeas: f64 = (cols..total)
            .map(|j| tab.value_of(j))
            .sum();
        if infeas > 1e-7 {
            return Ok(LpOutcome::Infeasible);
        }
        tab.evict_artificials(cols);
        // Freeze any stuck artificial at zero and make it costless.
        for j in cols..total {
            tab.upper[j] = 0.0;
            tab.cost[j] = 0.0;
        }
        for j in 0..n {
            tab.cost[j] = lp.objective[j];
        }
        for j in n..cols {
            tab.cost[j] = 0.0;
        }
        tab.recompute_reduced();
        tab.run()?;
        return Ok(tab.extract(lp));
    }

    let mut cost = vec![0.0; cols];
    cost[..n].copy_from_slice(&lp.objective);
    let mut tab = Tableau {
        cols,
        n_struct: n,
        t,
        beta,
        cost,
        reduced: Vec::new(),
        lower,
        upper,
        basis,
        state,
        degenerate_streak: 0,
        pivots: 0,
    };
    tab.recompute_reduced();
    tab.run()?;
    Ok(tab.extract(lp))
}

impl Tableau {
    fn value_of(&self, j: usize) -> f64 {
        match self.state[j] {
            VarState::Basic(i) => self.beta[i],
            VarState::AtLower => self.lower[j],
            VarState::AtUpper => self.upper[j],
        }
    }

    fn recompute_reduced(&mut self) {
        let rows = self.basis.len();
        let mut reduced = self.cost.clone();
        for i in 0..rows {
            let cb = self.cost[self.basis[i]];
            if cb != 0.0 {
                for j in 0..self.cols {
                    reduced[j] -= cb * self.t[i][j];
                }
            }
        }
        for &b in &self.basis {
            reduced[b] = 0.0;
        }
        self.reduced = reduced;
    }

    fn eligible(&self, j: usize) -> bool {
        match self.state[j] {
            VarState::Basic(_) => false,
            VarState::AtLower => self.reduced[j] > COST_TOL,
            VarState::AtUpper => self.reduced[j] < -COST_TOL,
        }
    }

    fn choose_entering(&self, bland: bool) -> Option<usize> {
        if bland {
            return (0..self.cols).find(|&j| self.eligible(j));
        }
        let mut best = None;
        let mut best_score = COST_TOL;
        for j in 0..self.cols {
            if self.eligible(j) {
                let score = self.reduced[j].abs();
                if score > best_score {
                    best_score = score;
                    best = Some(j);
                }
            }
        }
        best
    }

    fn run(&mut self) -> Result<(), SimplexError> {
        let rows = self.basis.len();
        let cap = 2000 + 200 * (rows + self.cols);
        loop {
            if self.pivots > cap {
                return Err(SimplexError::IterationLimit(self.pivots));
            }
            let bland = self.degenerate_streak > 2 * (rows + self.cols) + 10;
            let q = match self.choose_entering(bland) {
                Some(q) => q,
                None => return Ok(()),
            };
            self.pivots += 1;
            let dir = if self.state[q] == VarState::AtLower { 1.0 } else { -1.0 };

            // Ratio test: how far can x_q move toward its other bound
            // before a basic variable hits one of its own bounds?
            let span = self.upper[q] - self.lower[q];
            let mut t_limit = f64::INFINITY;
            let mut leave: Option<(usize, VarState)> = None;
            for i in 0..rows {
                let w = dir * self.t[i][q];
                if w.abs() <= PIVOT_TOL {
                    continue;
                }
                let b = self.basis[i];
                let (t_i, target) = if w > 0.0 {
                    ((self.beta[i] - self.lower[b]) / w, VarState::AtLower)
                } else {
                    if self.upper[b].is_infinite() {
                        continue;
                    }
                    ((self.upper[b] - self.beta[i]) / -w, VarState::AtUpper)
                };
                let t_i = t_i.max(0.0);
                let take = match leave {
                    None => t_i < t_limit,
                    Some((prev, _)) => {
                        t_i < t_limit - FEAS_TOL
                            // Bland tie-break: smallest leaving index.
                            || (bland
                                && (t_i - t_limit).abs() <= FEAS_TOL
                                && b < self.basis[prev])
                    }
                };
                if take {
                    t_limit = t_i;
                    leave = Some((i, target));
                }
            }

            if span <= t_limit {
                // The entering variable reaches its other bound first.
                if span.is_infinite() {
                    return Err(SimplexError::Unbounded);
                }
                let step = dir * span;
                for i in 0..rows {
                    self.beta[i] -= step * self.t[i][q];
                }
                self.state[q] = if dir > 0.0 { VarState::AtUpper } else { VarState::AtLower };
                self.note_progress(span);
            } else {
                let (rrow, target) = leave.expect("t_limit finite implies a leaving row");
                let step = dir * t_limit;
                let entering_value = self.value_of(q) + step;
                for i in 0..rows {
                    self.beta[i] -= step * self.t[i][q];
                }
                let leaving = self.basis[rrow];
                self.state[leaving] = target;
                self.basis[rrow] = q;
                self.state[q] = VarState::Basic(rrow);
                self.beta[rrow] = entering_value;
                self.eliminate(rrow, q);
                self.note_progress(t_limit);
            }
        }
    }

    fn note_progress(&mut self, step: f64) {
        if step <= FEAS_TOL {
            self.degenerate_streak += 1;
        } else {
            self.degenerate_streak = 0;
        }
    }

    fn eliminate(&mut self, r: usize, q: usize) {
        let piv = self.t[r][q];
        debug_assert!(piv.abs() > PIVOT_TOL * 1e-3, "pivot too small: {piv}");
        let inv = 1.0 / piv;
        for j in 0..self.cols {
            self.t[r][j] *= inv;
        }
        self.t[r][q] = 1.0;
        let pivot_row = self.t[r].clone();
        for i in 0..self.basis.len() {
            if i == r {
                continue;
            }
            let factor = self.t[i][q];
            if factor != 0.0 {
                for j in 0..self.cols {
                    self.t[i][j] -= factor * pivot_row[j];
                }
                self.t[i][q] = 0.0;
            }
        }
        let dfac = self.reduced[q];
        if dfac != 0.0 {
            for j in 0..self.cols {
                self.reduced[j] -= dfac * pivot_row[j];
            }
            self.reduced[q] = 0.0;
        }
    }

    /// Pivot basic artificials (all at value zero) out of the basis where a
    /// real column is available.
    fn evict_artificials(&mut self, first_artificial: usize) {
        for i in 0..self.basis.len() {
            if self.basis[i] < first_artificial {
                continue;
            }
            if let Some(q) = (0..first_artificial).find(|&j| {
                self.t[i][j].abs() > 1e-7 && !matches!(self.state[j], VarState::Basic(_))
            }) {
                let art = self.basis[i];
                self.state[art] = VarState::AtLower;
                self.basis[i] = q;
                self.beta[i] = self.value_of(q);
                self.state[q] = VarState::Basic(i);
                self.eliminate(i, q);
            }
        }
    }

    fn extract(&self, lp: &LinearProgram) -> LpOutcome {
        let point: Vec<f64> = (0..self.n_struct)
            .map(|j| {
                let v = self.value_of(j);
                v.clamp(self.lower[j], self.upper[j])
            })
            .collect();
        let value = lp
            .objective
            .iter()
            .zip(&point)
            .map(|(c, x)| c * x)
            .sum();
        LpOutcome::Optimal { value, point }
    }
}
