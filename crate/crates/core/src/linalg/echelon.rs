use crate::scalar::Scalar;

/// Reduced row echelon form in place, pivoting only in the first `ncols`
/// columns (leftmost nonzero first). Zero rows are dropped. Returns the pivot
/// column of each remaining row.
pub(crate) fn rref<F: Scalar>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        if next == rows.len() {
            break;
        }
        let Some(p) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, p);
        let inv = rows[next][col].inverse().expect("nonzero pivot");
        if !inv.is_one() {
            for v in rows[next].iter_mut() {
                *v = v.times(&inv);
            }
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = v.minus(&factor.times(pv));
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    pivots
}

/// Incrementally built semi-echelon basis: each stored row has a 1 at its
/// pivot and zeros at the pivots of earlier rows.
#[derive(Debug, Clone)]
pub(crate) struct Echelon<F: Scalar> {
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Scalar> Echelon<F> {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; if something survives it is added and
    /// `true` is returned.
    pub fn insert(&mut self, mut v: Vec<F>) -> bool {
        for (pc, row) in &self.rows {
            if v[*pc].is_zero() {
                continue;
            }
            let factor = v[*pc].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.minus(&factor.times(r));
                }
            }
        }
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pc].inverse().expect("nonzero pivot");
        if !inv.is_one() {
            for x in v.iter_mut() {
                *x = x.times(&inv);
            }
        }
        self.rows.push((pc, v));
        true
    }
}
