//! Group constructors: cyclic groups, direct and semidirect products, the
//! affine groups over GF(2^s), and matrix groups over prime fields.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::gf2m::{Gf2m, Gf2mElement};
use crate::group::table::{word_label, GroupTable, DEFAULT_CAP};

/// Cyclic group of order `n` generated by the element `1`, named `gen`.
pub fn cyclic_named(n: usize, gen: &str) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidTable("cyclic group of order 0".into()));
    }
    if n > DEFAULT_CAP.max(crate::bitset::MAX_ORDER) {
        return Err(Error::OrderExceedsCap { cap: crate::bitset::MAX_ORDER });
    }
    let mul: Vec<u8> = (0..n * n).map(|k| ((k / n + k % n) % n) as u8).collect();
    let inv: Vec<u8> = (0..n).map(|x| ((n - x) % n) as u8).collect();
    let labels = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => gen.to_string(),
            _ => format!("{gen}^{k}"),
        })
        .collect();
    let generators = if n > 1 { vec![(gen.to_string(), 1)] } else { Vec::new() };
    Ok(GroupTable::from_parts(n, mul, inv, labels, generators))
}

/// Cyclic group of order `n`: `mul(i, j) = (i + j) mod n`.
pub fn cyclic(n: usize) -> Result<GroupTable> {
    cyclic_named(n, "g")
}

fn combine_labels(left: &str, right: &str) -> String {
    match (left, right) {
        ("e", r) => r.to_string(),
        (l, "e") => l.to_string(),
        (l, r) => format!("{l}*{r}"),
    }
}

/// Direct product `G x H`; the pair `(i, j)` has index `i * |H| + j`.
pub fn direct_product(g: &GroupTable, h: &GroupTable, cap: usize) -> Result<GroupTable> {
    let (ng, nh) = (g.order(), h.order());
    let n = ng * nh;
    if n > cap.min(crate::bitset::MAX_ORDER) {
        return Err(Error::OrderExceedsCap { cap });
    }
    let mut mul = vec![0u8; n * n];
    for x in 0..n {
        let (xi, xj) = (x / nh, x % nh);
        for y in 0..n {
            let (yi, yj) = (y / nh, y % nh);
            mul[x * n + y] = (g.mul(xi, yi) * nh + h.mul(xj, yj)) as u8;
        }
    }
    let inv = (0..n).map(|x| (g.inv(x / nh) * nh + h.inv(x % nh)) as u8).collect();
    let labels = (0..n).map(|x| combine_labels(g.label(x / nh), h.label(x % nh))).collect();
    let mut generators: Vec<(String, usize)> =
        g.generators().iter().map(|(name, x)| (name.clone(), x * nh)).collect();
    generators.extend(h.generators().iter().map(|(name, y)| (name.clone(), *y)));
    Ok(GroupTable::from_parts(n, mul, inv, labels, generators))
}

/// An action of a group `H` on a group `N` by automorphisms.
///
/// Row `h` is the permutation of `N`'s indices given by `n -> h n h^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionTable {
    acting_order: usize,
    target_order: usize,
    rows: Vec<Vec<usize>>,
}

impl ActionTable {
    /// Validates and wraps explicit rows.
    pub fn new(acting: &GroupTable, target: &GroupTable, rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = ActionTable { acting_order: acting.order(), target_order: target.order(), rows };
        t.validate(acting, target)?;
        Ok(t)
    }

    /// The trivial action.
    pub fn trivial(acting: &GroupTable, target: &GroupTable) -> Self {
        let id: Vec<usize> = (0..target.order()).collect();
        ActionTable {
            acting_order: acting.order(),
            target_order: target.order(),
            rows: vec![id; acting.order()],
        }
    }

    /// Extends the images of `target`'s named generators under each of
    /// `acting`'s named generators to a full action table, then validates it.
    ///
    /// `images[i][j]` is the image of target generator `j` under acting
    /// generator `i`.
    pub fn from_generator_images(
        acting: &GroupTable,
        target: &GroupTable,
        images: &[Vec<usize>],
    ) -> Result<Self> {
        let agens = acting.generators();
        if images.len() != agens.len() {
            return Err(Error::NotAHomomorphism(format!(
                "{} acting generators but {} image lists",
                agens.len(),
                images.len()
            )));
        }
        let gen_rows: Vec<Vec<usize>> = images
            .iter()
            .enumerate()
            .map(|(i, imgs)| extend_endomorphism(target, imgs).ok_or(Error::NotAnAutomorphism(agens[i].1)))
            .collect::<Result<_>>()?;

        let n = target.order();
        let mut rows: Vec<Option<Vec<usize>>> = vec![None; acting.order()];
        rows[0] = Some((0..n).collect());
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for (gi, &(_, g)) in agens.iter().enumerate() {
                let w = acting.mul(u, g);
                // act(u g)(x) = act(u)(act(g)(x))
                let ru = rows[u].as_ref().expect("visited");
                let row: Vec<usize> = gen_rows[gi].iter().map(|&y| ru[y]).collect();
                match &rows[w] {
                    Some(existing) if *existing != row => {
                        return Err(Error::NotAHomomorphism(format!(
                            "two words for acting element {w} give different automorphisms"
                        )))
                    }
                    Some(_) => {}
                    None => {
                        rows[w] = Some(row);
                        queue.push_back(w);
                    }
                }
            }
        }
        let rows: Vec<Vec<usize>> = rows
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::NotAHomomorphism("acting generators do not generate the acting group".into()))?;
        ActionTable::new(acting, target, rows)
    }

    pub fn acting_order(&self) -> usize {
        self.acting_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    #[inline]
    pub fn apply(&self, h: usize, n: usize) -> usize {
        self.rows[h][n]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_trivial(&self) -> bool {
        self.rows.iter().all(|r| r.iter().enumerate().all(|(i, &j)| i == j))
    }

    fn validate(&self, acting: &GroupTable, target: &GroupTable) -> Result<()> {
        let n = target.order();
        if self.rows.len() != acting.order() {
            return Err(Error::NotAHomomorphism("row count differs from acting order".into()));
        }
        for (h, row) in self.rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAnAutomorphism(h));
            }
            let mut seen = vec![false; n];
            for &y in row {
                if y >= n || seen[y] {
                    return Err(Error::NotAnAutomorphism(h));
                }
                seen[y] = true;
            }
            for x in 0..n {
                for y in 0..n {
                    if row[target.mul(x, y)] != target.mul(row[x], row[y]) {
                        return Err(Error::NotAnAutomorphism(h));
                    }
                }
            }
        }
        if self.rows[0].iter().enumerate().any(|(i, &j)| i != j) {
            return Err(Error::NotAHomomorphism("identity acts nontrivially".into()));
        }
        for a in 0..acting.order() {
            for b in 0..acting.order() {
                let ab = acting.mul(a, b);
                if (0..n).any(|x| self.rows[ab][x] != self.rows[a][self.rows[b][x]]) {
                    return Err(Error::NotAHomomorphism(format!("act({a}*{b}) != act({a}) o act({b})")));
                }
            }
        }
        Ok(())
    }
}

/// Extends generator images to a map on the whole group by
/// `phi(x g) = phi(x) phi(g)`; `None` if inconsistent or not bijective.
fn extend_endomorphism(target: &GroupTable, images: &[usize]) -> Option<Vec<usize>> {
    let gens = target.generators();
    if images.len() != gens.len() || images.iter().any(|&y| y >= target.order()) {
        return None;
    }
    let n = target.order();
    let mut phi: Vec<Option<usize>> = vec![None; n];
    phi[0] = Some(0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let px = phi[x]?;
        for (gi, &(_, g)) in gens.iter().enumerate() {
            let y = target.mul(x, g);
            let py = target.mul(px, images[gi]);
            match phi[y] {
                Some(v) if v != py => return None,
                Some(_) => {}
                None => {
                    phi[y] = Some(py);
                    queue.push_back(y);
                }
            }
        }
    }
    let phi: Vec<usize> = phi.into_iter().collect::<Option<_>>()?;
    let mut seen = vec![false; n];
    for &y in &phi {
        if seen[y] {
            return None;
        }
        seen[y] = true;
    }
    Some(phi)
}

/// Semidirect product `N x| H` with `(n1, h1)(n2, h2) = (n1 act(h1)(n2), h1 h2)`.
///
/// The pair `(n, h)` has index `h * |N| + n`, so `N` occupies the first
/// `|N|` indices. In the result `h n h^-1 = act(h)(n)`.
pub fn semidirect_product(
    normal: &GroupTable,
    acting: &GroupTable,
    act: &ActionTable,
    cap: usize,
) -> Result<GroupTable> {
    if act.target_order() != normal.order() || act.acting_order() != acting.order() {
        return Err(Error::NotAHomomorphism("action table does not match the factors".into()));
    }
    let (nn, nh) = (normal.order(), acting.order());
    let n = nn * nh;
    if n > cap.min(crate::bitset::MAX_ORDER) {
        return Err(Error::OrderExceedsCap { cap });
    }
    let split = |x: usize| (x % nn, x / nn);
    let mut mul = vec![0u8; n * n];
    for x in 0..n {
        let (n1, h1) = split(x);
        for y in 0..n {
            let (n2, h2) = split(y);
            let nprod = normal.mul(n1, act.apply(h1, n2));
            mul[x * n + y] = (acting.mul(h1, h2) * nn + nprod) as u8;
        }
    }
    let inv = (0..n)
        .map(|x| {
            let (n1, h1) = split(x);
            let hi = acting.inv(h1);
            (hi * nn + act.apply(hi, normal.inv(n1))) as u8
        })
        .collect();
    let labels = (0..n)
        .map(|x| {
            let (n1, h1) = split(x);
            combine_labels(normal.label(n1), acting.label(h1))
        })
        .collect();
    let mut generators: Vec<(String, usize)> = normal.generators().to_vec();
    generators.extend(acting.generators().iter().map(|(name, h)| (name.clone(), h * nn)));
    Ok(GroupTable::from_parts(n, mul, inv, labels, generators))
}

/// The affine group `{x -> a x + u : a in GF(q)*, u in GF(q)}` for `q = 2^s`,
/// of order `q (q - 1)`. Generators: `d = (x -> g x)` with `g` primitive and
/// `u = (x -> x + 1)`.
pub fn affine_gf2s(s: u32) -> Result<GroupTable> {
    let field = Gf2m::standard(s).ok_or_else(|| Error::InvalidTable(format!("s = {s} outside 1..=5")))?;
    affine_over(&field)
}

/// Affine group over an explicit GF(2^m) context.
pub fn affine_over(field: &Gf2m) -> Result<GroupTable> {
    type Affine = (Gf2mElement, Gf2mElement);
    // matrix [[a, u], [0, 1]]; product [[a, u],[0,1]] [[b, v],[0,1]] = [[ab, av + u],[0,1]]
    let mul = |p: &Affine, q: &Affine| -> Affine { (field.mul(p.0, q.0), field.add(field.mul(p.0, q.1), p.1)) };
    let gens = vec![
        ("d".to_string(), (field.x(), field.zero())),
        ("u".to_string(), (field.one(), field.one())),
    ];
    let gens: Vec<(String, Affine)> = gens.into_iter().filter(|(_, g)| *g != (field.one(), field.zero())).collect();
    let cap = crate::bitset::MAX_ORDER;
    GroupTable::from_closure((field.one(), field.zero()), &gens, mul, |p, _| format!("[{:b},{:b}]", p.0 .0, p.1 .0), cap)
}

/// A square matrix over a prime field, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u32,
    dim: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn new(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidTable("matrix must be square and nonempty".into()));
        }
        let entries = rows.iter().flatten().map(|&v| v.rem_euclid(p as i64) as u32).collect();
        Ok(Matrix { p, dim, entries })
    }

    pub fn identity(p: u32, dim: usize) -> Self {
        let entries = (0..dim * dim).map(|k| u32::from(k / dim == k % dim)).collect();
        Matrix { p, dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let d = self.dim;
        let mut entries = vec![0u32; d * d];
        for i in 0..d {
            for j in 0..d {
                let s: u32 = (0..d).map(|k| self.entries[i * d + k] * other.entries[k * d + j]).sum();
                entries[i * d + j] = s % self.p;
            }
        }
        Matrix { p: self.p, dim: d, entries }
    }

    /// `M v` for a column vector `v`.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let d = self.dim;
        (0..d).map(|i| (0..d).map(|k| self.entries[i * d + k] * v[k]).sum::<u32>() % self.p).collect()
    }

    pub fn is_invertible(&self) -> bool {
        // Gaussian elimination mod p
        let (d, p) = (self.dim, self.p);
        let mut m: Vec<u32> = self.entries.clone();
        for col in 0..d {
            let Some(piv) = (col..d).find(|&r| m[r * d + col] != 0) else { return false };
            for k in 0..d {
                m.swap(col * d + k, piv * d + k);
            }
            let inv = mod_pow(m[col * d + col], p - 2, p);
            for r in 0..d {
                if r != col && m[r * d + col] != 0 {
                    let f = m[r * d + col] * inv % p;
                    for k in 0..d {
                        m[r * d + k] = (m[r * d + k] + p * p - f * m[col * d + k] % p) % p;
                    }
                }
            }
        }
        true
    }
}

fn mod_pow(mut b: u32, mut e: u32, p: u32) -> u32 {
    let mut acc = 1u32;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// The group generated by invertible matrices over GF(p); also returns the
/// matrix behind each index. Labels are words in the generator names.
pub fn matrix_group(gens: &[(String, Matrix)], cap: usize) -> Result<(GroupTable, Vec<Matrix>)> {
    let first = gens.first().ok_or_else(|| Error::InvalidTable("matrix group needs a generator".into()))?;
    let (p, d) = (first.1.p, first.1.dim);
    if gens.iter().any(|(_, m)| m.p != p || m.dim != d || !m.is_invertible()) {
        return Err(Error::InvalidTable("generators must be invertible matrices of one size and field".into()));
    }
    let names: Vec<&str> = gens.iter().map(|(n, _)| n.as_str()).collect();
    GroupTable::from_closure_with_elements(Matrix::identity(p, d), gens, |a, b| a.mul(b), |_, w| word_label(&names, w), cap)
}

/// Action of a matrix group on the elementary abelian group `C_p^d` whose
/// named generators are the standard basis vectors in order: the vector
/// `(v1, .., vd)` is `g1^v1 * .. * gd^vd`.
pub fn linear_action(acting: &GroupTable, matrices: &[Matrix], target: &GroupTable) -> Result<ActionTable> {
    let basis: Vec<usize> = target.generators().iter().map(|&(_, g)| g).collect();
    let Some(m0) = matrices.first() else {
        return Err(Error::NotAHomomorphism("no matrices".into()));
    };
    let (p, d) = (m0.p as usize, m0.dim);
    if basis.len() != d || basis.iter().any(|&g| target.element_order(g) != p) || target.order() != p.pow(d as u32)
    {
        return Err(Error::NotAHomomorphism("target is not C_p^d with a named standard basis".into()));
    }
    let mut vec_of = vec![None; target.order()];
    let mut elem_of = std::collections::HashMap::new();
    let mut v = vec![0u32; d];
    loop {
        let x = v.iter().zip(&basis).fold(0, |acc, (&c, &g)| target.mul(acc, target.pow(g, c as usize)));
        vec_of[x] = Some(v.clone());
        elem_of.insert(v.clone(), x);
        // odometer
        let mut i = 0;
        while i < d {
            v[i] += 1;
            if v[i] < p as u32 {
                break;
            }
            v[i] = 0;
            i += 1;
        }
        if i == d {
            break;
        }
    }
    let vec_of: Vec<Vec<u32>> = vec_of
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::NotAHomomorphism("basis does not span the target".into()))?;
    let rows = (0..acting.order())
        .map(|h| vec_of.iter().map(|v| elem_of[&matrices[h].apply(v)]).collect())
        .collect();
    ActionTable::new(acting, target, rows)
}
