//! Integer lattice algebra over finite coordinate boxes.
//!
//! Additive subgroups of ⊕_j Z/m_j are represented by their preimage
//! lattices in Z^k: full-rank lattices containing diag(m_1..m_k)·Z^k, kept in
//! lower-triangular column Hermite normal form. That form is canonical, so
//! subgroup equality is matrix equality, membership is forward substitution,
//! and subgroup size is a diagonal product.
//!
//! Matrices are column lists; `cols[j][i]` is row i of column j.

/// Extended gcd: returns (g, s, t) with s·a + t·b = g and g = gcd(a, b) ≥ 0.
pub fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, s, t) = egcd(b, a.rem_euclid(b));
        (g, t, s - a.div_euclid(b) * t)
    }
}

/// Column Hermite normal form by unimodular column operations.
///
/// Output columns span the same lattice; pivots descend the rows, each pivot
/// is positive, and entries left of a pivot in its row are reduced into
/// [0, pivot). Zero columns are dropped.
pub fn col_hnf(mut cols: Vec<Vec<i64>>, nrows: usize) -> Vec<Vec<i64>> {
    let mut pivot = 0;
    for row in 0..nrows {
        if pivot == cols.len() {
            break;
        }
        for j in (pivot + 1)..cols.len() {
            if cols[j][row] != 0 {
                combine_columns(&mut cols, pivot, j, row, nrows);
            }
        }
        if cols[pivot][row] != 0 {
            if cols[pivot][row] < 0 {
                for i in 0..nrows {
                    cols[pivot][i] = -cols[pivot][i];
                }
            }
            let d = cols[pivot][row];
            for j in 0..pivot {
                let q = cols[j][row].div_euclid(d);
                if q != 0 {
                    for i in 0..nrows {
                        cols[j][i] -= q * cols[pivot][i];
                    }
                }
            }
            pivot += 1;
        }
    }
    cols.truncate(pivot);
    cols
}

/// Replaces columns (p, j) by unimodular combinations so that row `row` of
/// column j becomes 0 and row `row` of column p becomes gcd of the two.
fn combine_columns(cols: &mut [Vec<i64>], p: usize, j: usize, row: usize, nrows: usize) {
    let (g, s, t) = egcd(cols[p][row], cols[j][row]);
    let a = cols[p][row] / g;
    let b = cols[j][row] / g;
    for i in 0..nrows {
        let x = cols[p][i];
        let y = cols[j][i];
        cols[p][i] = s * x + t * y;
        cols[j][i] = a * y - b * x;
    }
}

/// Basis of {v : Σ_j v_j·cols_j = 0}, the integer kernel of the column
/// combination map.
pub fn kernel_int(cols: &[Vec<i64>], nrows: usize) -> Vec<Vec<i64>> {
    let n = cols.len();
    let mut m: Vec<Vec<i64>> = cols.to_vec();
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..n).map(|i| i64::from(i == j)).collect())
        .collect();
    let mut pivot = 0;
    for row in 0..nrows {
        if pivot == n {
            break;
        }
        for j in (pivot + 1)..n {
            if m[j][row] != 0 {
                let (g, s, t) = egcd(m[pivot][row], m[j][row]);
                let a = m[pivot][row] / g;
                let b = m[j][row] / g;
                for i in 0..nrows {
                    let x = m[pivot][i];
                    let y = m[j][i];
                    m[pivot][i] = s * x + t * y;
                    m[j][i] = a * y - b * x;
                }
                for i in 0..n {
                    let x = u[pivot][i];
                    let y = u[j][i];
                    u[pivot][i] = s * x + t * y;
                    u[j][i] = a * y - b * x;
                }
            }
        }
        if m[pivot][row] != 0 {
            pivot += 1;
        }
    }
    u.split_off(pivot)
}

/// Canonical basis of an additive subgroup of ⊕_j Z/moduli_j given any
/// generating set of its preimage lattice: appends the diagonal relations
/// and takes the column HNF. The result is square, lower triangular, with
/// h_jj dividing moduli_j.
pub fn canonical_subgroup_basis(
    mut gens: Vec<Vec<i64>>,
    moduli: &[i64],
) -> Vec<Vec<i64>> {
    let k = moduli.len();
    for (j, &m) in moduli.iter().enumerate() {
        let mut col = vec![0i64; k];
        col[j] = m;
        gens.push(col);
    }
    let hnf = col_hnf(gens, k);
    assert_eq!(hnf.len(), k, "diagonal relations force full rank");
    hnf
}

/// Membership of x in the lattice spanned by a full-rank lower-triangular
/// canonical basis, by forward substitution.
pub fn lattice_contains(hnf: &[Vec<i64>], x: &[i64]) -> bool {
    let k = x.len();
    let mut rem: Vec<i64> = x.to_vec();
    for j in 0..k {
        let d = hnf[j][j];
        if rem[j] % d != 0 {
            return false;
        }
        let q = rem[j] / d;
        if q != 0 {
            for i in j..k {
                rem[i] -= q * hnf[j][i];
            }
        }
    }
    true
}

/// Number of subgroup elements: Π moduli_j / Π h_jj.
pub fn subgroup_size(hnf: &[Vec<i64>], moduli: &[i64]) -> u128 {
    moduli
        .iter()
        .enumerate()
        .map(|(j, &m)| (m / hnf[j][j]) as u128)
        .fold(1u128, |a, b| a * b)
}

/// All subgroup elements as reduced coordinate vectors (entries in
/// [0, moduli_j)), in a deterministic mixed-radix order. The caller bounds
/// the size first via [`subgroup_size`].
pub fn coset_reps(hnf: &[Vec<i64>], moduli: &[i64]) -> Vec<Vec<i64>> {
    let k = moduli.len();
    let radices: Vec<i64> = (0..k).map(|j| moduli[j] / hnf[j][j]).collect();
    let total: u128 = radices.iter().map(|&r| r as u128).product();
    let mut out = Vec::with_capacity(total as usize);
    let mut y = vec![0i64; k];
    loop {
        let mut x = vec![0i64; k];
        for j in 0..k {
            if y[j] != 0 {
                for i in 0..k {
                    x[i] += y[j] * hnf[j][i];
                }
            }
        }
        for (i, xi) in x.iter_mut().enumerate() {
            *xi = xi.rem_euclid(moduli[i]);
        }
        out.push(x);
        let mut j = 0;
        loop {
            if j == k {
                return out;
            }
            y[j] += 1;
            if y[j] < radices[j] {
                break;
            }
            y[j] = 0;
            j += 1;
        }
    }
}

/// Intersection of two subgroups given by canonical bases over the same
/// moduli, returned canonical.
pub fn lattice_intersect(
    a: &[Vec<i64>],
    b: &[Vec<i64>],
    moduli: &[i64],
) -> Vec<Vec<i64>> {
    let k = moduli.len();
    let mut stacked: Vec<Vec<i64>> = a.to_vec();
    for col in b {
        stacked.push(col.iter().map(|&v| -v).collect());
    }
    let kern = kernel_int(&stacked, k);
    let mut gens = Vec::with_capacity(kern.len());
    for v in &kern {
        let mut x = vec![0i64; k];
        for (j, &vj) in v.iter().take(a.len()).enumerate() {
            if vj != 0 {
                for i in 0..k {
                    x[i] += vj * a[j][i];
                }
            }
        }
        gens.push(x);
    }
    canonical_subgroup_basis(gens, moduli)
}

/// Incremental solver for systems of single congruences over a coordinate
/// box: maintains the canonical basis of
/// {x ∈ Z^k : row·x ≡ 0 (mod m_row) for every added row}.
///
/// Every added row must be well defined on the box: row_j·moduli_j ≡ 0
/// (mod m_row). The basis is re-canonicalized after every row, which keeps
/// all entries below max(moduli) and makes i64 arithmetic safe.
#[derive(Debug, Clone)]
pub struct CongruenceKernel {
    moduli: Vec<i64>,
    basis: Vec<Vec<i64>>,
}

impl CongruenceKernel {
    /// Starts from the full box (identity basis).
    pub fn all(moduli: &[i64]) -> Self {
        assert!(moduli.iter().all(|&m| m >= 1));
        let k = moduli.len();
        let basis = (0..k)
            .map(|j| (0..k).map(|i| i64::from(i == j)).collect())
            .collect();
        CongruenceKernel {
            moduli: moduli.to_vec(),
            basis,
        }
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    /// Canonical square lower-triangular basis of the current solution set.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn solution_count(&self) -> u128 {
        subgroup_size(&self.basis, &self.moduli)
    }

    /// Restricts to solutions of row·x ≡ 0 (mod modulus).
    pub fn add_constraint(&mut self, row: &[i64], modulus: i64) {
        assert_eq!(row.len(), self.moduli.len());
        assert!(modulus >= 1);
        debug_assert!(
            row.iter()
                .zip(&self.moduli)
                .all(|(&r, &m)| (r * m).rem_euclid(modulus) == 0),
            "constraint row is not well defined on the coordinate box"
        );
        let k = self.moduli.len();
        // express the constraint in basis coordinates
        let mut c: Vec<i64> = self
            .basis
            .iter()
            .map(|col| {
                col.iter()
                    .zip(row)
                    .map(|(&x, &r)| (x.rem_euclid(modulus) * r.rem_euclid(modulus)) % modulus)
                    .sum::<i64>()
                    .rem_euclid(modulus)
            })
            .collect();
        if c.iter().all(|&v| v == 0) {
            return;
        }
        // unimodular column mixing until only c[0] is nonzero
        for j in 1..k {
            if c[j] != 0 {
                let (g, s, t) = egcd(c[0], c[j]);
                let a = c[0] / g;
                let b = c[j] / g;
                for i in 0..k {
                    let x = self.basis[0][i];
                    let y = self.basis[j][i];
                    self.basis[0][i] = s * x + t * y;
                    self.basis[j][i] = a * y - b * x;
                }
                c[0] = g;
                c[j] = 0;
            }
        }
        // g·y ≡ 0 (mod m) forces y ≡ 0 (mod m / gcd(g, m))
        let (g, _, _) = egcd(c[0], modulus);
        let scale = modulus / g;
        if scale != 1 {
            for v in self.basis[0].iter_mut() {
                *v *= scale;
            }
        }
        self.basis = canonical_subgroup_basis(std::mem::take(&mut self.basis), &self.moduli);
    }
}
