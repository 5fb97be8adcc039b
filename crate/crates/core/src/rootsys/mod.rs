//! Finite root systems built from Cartan data.
//!
//! Cartan convention: `a_ij = 2(α_i, α_j) / (α_i, α_i)`, so row `i` is
//! indexed by the coroot of `α_i` and the Gram matrix of the invariant form
//! is literally `diag(d) · A` with `d_i = (α_i, α_i) / 2`. The form is
//! normalized so that short roots have squared length 2 in every simple
//! component.
//!
//! Labelling of the named types follows Bourbaki except for `B_n` and
//! `C_n`, whose special node is `α_1`: in `B_n` the root `α_1` is short, in
//! `C_n` it is long. With this labelling `B2` has `(α_2, α_2) = 4` and the
//! highest root of `G2` is `3α_1 + 2α_2`.

mod lattice;
mod qvec;

use std::collections::HashMap;

use num::{BigInt, One, Zero};

pub use lattice::{integer_kernel, lattice_leq, LatticeSubgroup};
pub use qvec::QVec;

use crate::coeffs::Rat;
use crate::error::{Error, Result};
use crate::weyl::WeylElt;

#[derive(Clone, Debug)]
pub struct RootSystem {
    name: String,
    cartan: Vec<Vec<i64>>,
    d: Vec<i64>,
    gram: Vec<Vec<i64>>,
    pos_roots: Vec<QVec>,
    index: HashMap<QVec, usize>,
}

impl RootSystem {
    /// Builds from a type string such as `"A2"`, `"G2"` or `"A1xA1"`.
    pub fn from_type(spec: &str) -> Result<Self> {
        let parts: Vec<&str> = spec.split(['x', '×', '+']).map(str::trim).filter(|s| !s.is_empty()).collect();
        if parts.is_empty() {
            return Err(Error::UnknownType(spec.to_string()));
        }
        let blocks = parts
            .iter()
            .map(|p| simple_gram(p).ok_or_else(|| Error::UnknownType(spec.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut gram = vec![vec![0; n]; n];
        let mut off = 0;
        for b in &blocks {
            for (i, row) in b.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    gram[off + i][off + j] = x;
                }
            }
            off += b.len();
        }
        let cartan = (0..n).map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect()).collect();
        let mut rs = Self::from_cartan(cartan)?;
        rs.name = parts.join("x");
        Ok(rs)
    }

    /// Builds from an explicit Cartan matrix, checking that it is of finite type.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self> {
        let n = cartan.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        if cartan.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        for i in 0..n {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry a_{i}{i} != 2", i = i + 1)));
            }
            for j in 0..n {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::InvalidCartan(format!(
                        "entries a_{}{} / a_{}{} violate sign or zero pattern",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        let d = symmetrizer(&cartan)?;
        let gram: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| d[i] * cartan[i][j]).collect()).collect();
        for k in 1..=n {
            let minor: Vec<Vec<i64>> = gram[..k].iter().map(|r| r[..k].to_vec()).collect();
            if determinant(&minor) <= 0 {
                return Err(Error::InvalidCartan(format!(
                    "leading principal minor of order {k} is not positive (not of finite type)"
                )));
            }
        }
        if d.iter().any(|&x| !(1..=3).contains(&x)) {
            return Err(Error::InvalidCartan("symmetrizer outside {1,2,3}".into()));
        }
        let pos_roots = positive_roots(&cartan);
        let index = pos_roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        Ok(RootSystem { name: "custom".into(), cartan, d, gram, pos_roots, index })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// `d_i = (α_i, α_i) / 2`.
    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Positive roots ordered by height, then by decreasing coordinates
    /// (so the simple roots come first, as `α_1, α_2, ...`).
    pub fn positive_roots(&self) -> &[QVec] {
        &self.pos_roots
    }

    pub fn simple_root(&self, i: usize) -> QVec {
        QVec::simple(self.rank(), i)
    }

    pub fn root_index(&self, v: &QVec) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_positive_root(&self, v: &QVec) -> bool {
        self.index.contains_key(v)
    }

    pub fn is_root(&self, v: &QVec) -> bool {
        self.is_positive_root(v) || self.is_positive_root(&-v)
    }

    pub fn highest_root(&self) -> &QVec {
        self.pos_roots.last().unwrap()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.pos_roots.len()
    }

    /// `(x, y) = xᵀ B y`.
    pub fn bilinear(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x[i] * self.gram[i][j] * y[j];
            }
        }
        s
    }

    /// `(x, y)` for a rational vector `y`.
    pub fn bilinear_rat(&self, x: &[i64], y: &[Rat]) -> Rat {
        let mut s = Rat::zero();
        for i in 0..self.rank() {
            if x[i] == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                s += yj * Rat::from_integer(BigInt::from(x[i] * self.gram[i][j]));
            }
        }
        s
    }

    /// `⟨x, α_i^∨⟩ = 2(α_i, x) / (α_i, α_i)`.
    pub fn coroot_pairing(&self, i: usize, x: &[i64]) -> i64 {
        self.cartan[i].iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// `s_β(x) = x - (2(β,x)/(β,β)) β` for a root `β`.
    pub fn reflect(&self, beta: &QVec, x: &QVec) -> QVec {
        let bb = self.bilinear(beta, beta);
        let bx = self.bilinear(beta, x);
        debug_assert_eq!((2 * bx) % bb, 0, "non-integral reflection");
        x - &beta.scale(2 * bx / bb)
    }

    /// Height of an element of Q+.
    pub fn height(&self, x: &QVec) -> Result<i64> {
        if !x.is_nonneg() {
            return Err(Error::NotInPositiveCone);
        }
        Ok(x.coord_sum())
    }

    /// `L^⊥ ∩ Q` for the subgroup generated by `set`.
    pub fn orthogonal_complement_lattice<'a, I>(&self, set: I) -> LatticeSubgroup
    where
        I: IntoIterator<Item = &'a QVec>,
    {
        let n = self.rank();
        let rows: Vec<Vec<i64>> =
            set.into_iter().map(|s| (0..n).map(|j| (0..n).map(|i| s[i] * self.gram[i][j]).sum()).collect()).collect();
        integer_kernel(&rows, n)
    }

    /// `2ρ`, the sum of the positive roots.
    pub fn two_rho(&self) -> QVec {
        let mut acc = QVec::zero(self.rank());
        for r in &self.pos_roots {
            acc = &acc + r;
        }
        acc
    }

    /// ρ in rational root coordinates.
    pub fn rho(&self) -> Vec<Rat> {
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        self.two_rho().iter().map(|&c| Rat::from_integer(c.into()) * &half).collect()
    }

    /// Fundamental weights `ω_i` in rational root coordinates, i.e. the
    /// solutions of `(ω_i, α_j) = δ_ij d_j`.
    pub fn fundamental_weights(&self) -> Vec<Vec<Rat>> {
        let n = self.rank();
        let b: Vec<Vec<Rat>> =
            self.gram.iter().map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect()).collect();
        let inv = rational_inverse(&b);
        // ω_i = B⁻¹ (d_i e_i): column i of B⁻¹ scaled by d_i.
        (0..n).map(|i| (0..n).map(|k| &inv[k][i] * Rat::from_integer(self.d[i].into())).collect()).collect()
    }

    /// `(β, u·λ)` for a rational weight `λ` in root coordinates.
    pub fn pair_with_weight(&self, beta: &QVec, u: &WeylElt, lambda: &[Rat]) -> Rat {
        self.bilinear_rat(beta, &u.apply_rat(lambda))
    }

    /// `(β, u·ρ)`.
    pub fn pair_with_rho(&self, beta: &QVec, u: &WeylElt) -> Rat {
        self.pair_with_weight(beta, u, &self.rho())
    }

    /// True iff `(α_i, λ) > 0` for all simple roots.
    pub fn is_regular_dominant(&self, lambda: &[Rat]) -> bool {
        (0..self.rank()).all(|i| self.bilinear_rat(&self.simple_root(i), lambda) > Rat::zero())
    }
}

/// Gram matrix of a simple type, or `None` if the name is not recognized.
fn simple_gram(name: &str) -> Option<Vec<Vec<i64>>> {
    let mut chars = name.chars();
    let letter = chars.next()?.to_ascii_uppercase();
    let n: usize = chars.as_str().parse().ok()?;
    let mut g = vec![vec![0i64; n]; n];
    let edge = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    match (letter, n) {
        ('A', 1..=8) => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 1..n {
                edge(&mut g, i, i + 1, -1);
            }
        }
        ('B', 2..=8) => {
            g[0][0] = 2;
            for i in 1..n {
                g[i][i] = 4;
            }
            for i in 1..n {
                edge(&mut g, i, i + 1, -2);
            }
        }
        ('C', 2..=8) => {
            g[0][0] = 4;
            for i in 1..n {
                g[i][i] = 2;
            }
            edge(&mut g, 1, 2, -2);
            for i in 2..n {
                edge(&mut g, i, i + 1, -1);
            }
        }
        ('D', 4..=8) => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 1..n - 1 {
                edge(&mut g, i, i + 1, -1);
            }
            edge(&mut g, n - 2, n, -1);
        }
        ('E', 6..=8) => {
            for i in 0..n {
                g[i][i] = 2;
            }
            edge(&mut g, 1, 3, -1);
            edge(&mut g, 2, 4, -1);
            for i in 3..n {
                edge(&mut g, i, i + 1, -1);
            }
        }
        ('F', 4) => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            edge(&mut g, 1, 2, -2);
            edge(&mut g, 2, 3, -2);
            edge(&mut g, 3, 4, -1);
        }
        ('G', 2) => {
            g[0][0] = 2;
            g[1][1] = 6;
            edge(&mut g, 1, 2, -3);
        }
        _ => return None,
    }
    Some(g)
}

/// Integer symmetrizer `d` with `d_i a_ij = d_j a_ji`, minimal entry 1 in
/// each connected component.
fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = a.len();
    let mut d: Vec<Option<Rat>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        let mut comp = vec![start];
        d[start] = Some(Rat::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // d_j = d_i a_ij / a_ji
                let dj = d[i].clone().unwrap() * Rat::new(a[i][j].into(), a[j][i].into());
                match &d[j] {
                    Some(existing) if *existing != dj => {
                        return Err(Error::InvalidCartan("matrix is not symmetrizable".into()))
                    }
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
        }
        // Scale the component to coprime integers with minimum 1.
        let lcm =
            comp.iter().fold(BigInt::one(), |acc, &i| num::integer::lcm(acc, d[i].as_ref().unwrap().denom().clone()));
        let ints: Vec<BigInt> = comp.iter().map(|&i| (d[i].clone().unwrap() * &lcm).to_integer()).collect();
        let min = ints.iter().min().unwrap().clone();
        for (&i, v) in comp.iter().zip(ints) {
            let r = Rat::new(v, min.clone());
            if !r.is_integer() {
                return Err(Error::InvalidCartan("symmetrizer is not integral".into()));
            }
            d[i] = Some(r);
        }
    }
    d.into_iter()
        .map(|x| {
            let x = x.unwrap().to_integer();
            i64::try_from(x).map_err(|_| Error::InvalidCartan("symmetrizer overflow".into()))
        })
        .collect()
}

/// Exact determinant by fraction-free elimination.
fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn rational_inverse(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("singular matrix");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Positive roots by the root-string algorithm, sorted by height and then
/// by decreasing coordinate vector.
fn positive_roots(a: &[Vec<i64>]) -> Vec<QVec> {
    let n = a.len();
    let mut roots: Vec<QVec> = (0..n).map(|i| QVec::simple(n, i)).collect();
    let mut known: std::collections::HashSet<QVec> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let ai = QVec::simple(n, i);
                if *beta == ai {
                    continue;
                }
                // p = largest k with beta - k α_i a root
                let mut p = 0;
                let mut cur = beta - &ai;
                while known.contains(&cur) {
                    p += 1;
                    cur = &cur - &ai;
                }
                let pairing: i64 = a[i].iter().zip(beta.iter()).map(|(x, y)| x * y).sum();
                if p - pairing > 0 {
                    let up = beta + &ai;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots.sort_by(|x, y| x.coord_sum().cmp(&y.coord_sum()).then_with(|| y.cmp(x)));
    roots
}
