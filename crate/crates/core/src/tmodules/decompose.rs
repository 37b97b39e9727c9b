use crate::error::{Error, Result};
use crate::graph_core::{
    bfs_layers, intersection_array, primitive_idempotents, q_polynomial_orderings, krein_parameters, spectrum, Graph,
    PrimitiveIdempotents,
};
use crate::linalg::{dot, is_zero_vec, nullspace, orthogonal_basis, primitive, Echelon, Matrix};
use crate::rational::{q, Q};
use crate::terwilliger::{LayerOps, Op};
use nalgebra::DMatrix;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Which algebra the modules are invariant under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Algebra {
    /// `T = ⟨A, E*_0, …, E*_ε⟩`, generated by `L`, `F`, `R` and the `E*_i`.
    T,
    /// `T_f`, the algebra of the flattened graph: `L`, `R` and the `E*_i`.
    Tf,
}

impl Algebra {
    pub fn generators(self) -> &'static [Op] {
        match self {
            Algebra::T => &[Op::L, Op::F, Op::R],
            Algebra::Tf => &[Op::L, Op::R],
        }
    }
}

impl std::str::FromStr for Algebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "t" => Ok(Algebra::T),
            "tf" | "t_f" | "t-f" => Ok(Algebra::Tf),
            other => Err(Error::InvalidParams(format!("unknown algebra `{other}` (use T or Tf)"))),
        }
    }
}

/// One module of a decomposition, with its basis kept per layer.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleDescriptor {
    pub algebra: Algebra,
    pub endpoint: usize,
    pub diameter: usize,
    /// `dim E*_iW` for `i = r, …, r + d`.
    pub layer_dims: Vec<usize>,
    pub dim: usize,
    pub thin: bool,
    /// First `i` (in the chosen ordering of primitive idempotents) with `E_iW ≠ 0`.
    pub dual_endpoint: Option<usize>,
    /// Eigenvalue of `F` on `E*_rW` for thin `T`-modules.
    #[serde(with = "crate::rational::serde_fraction_opt")]
    pub local_eigenvalue: Option<Q>,
    /// Matrix of `F` on `E*_rW` in the slice basis, for non-thin `T`-modules.
    #[serde(serialize_with = "ser_matrix_opt")]
    pub flat_matrix: Option<Matrix>,
    /// The commutant of the module is one-dimensional.
    pub certified_irreducible: bool,
    /// Splitting could not be done over the rationals; the module may be reducible over the reals.
    pub numeric_fallback: bool,
    /// Orthogonal basis of each slice, indexed by layer (empty outside `r..=r+d`).
    #[serde(skip)]
    pub slices: Vec<Vec<Vec<Q>>>,
}

fn ser_matrix_opt<S: serde::Serializer>(m: &Option<Matrix>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let strings: Option<Vec<Vec<String>>> =
        m.as_ref().map(|m| m.iter().map(|r| r.iter().map(crate::rational::to_fraction_string).collect()).collect());
    strings.serialize(s)
}

impl ModuleDescriptor {
    pub fn slice(&self, layer: usize) -> &[Vec<Q>] {
        self.slices.get(layer).map_or(&[], Vec::as_slice)
    }

    /// Basis vectors embedded in the whole standard module.
    pub fn global_basis(&self, ops: &LayerOps) -> Vec<Vec<Q>> {
        self.slices.iter().enumerate().flat_map(|(i, s)| s.iter().map(move |v| ops.embed(i, v))).collect()
    }
}

#[derive(Clone, Debug)]
pub struct DecomposeOptions {
    pub algebra: Algebra,
    /// Stop after modules with this endpoint; `None` decomposes all of `V`.
    pub max_endpoint: Option<usize>,
    pub seed: u64,
    /// Compute dual endpoints when the spectrum is rational.
    pub dual_endpoints: bool,
    /// Attempts with fresh splitting elements before falling back.
    pub attempts: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        Self { algebra: Algebra::T, max_endpoint: None, seed: 0xdec0, dual_endpoints: true, attempts: 6 }
    }
}

/// An orthogonal direct sum of irreducible modules.
#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub base: usize,
    pub algebra: Algebra,
    pub modules: Vec<ModuleDescriptor>,
    /// Dimension covered by the modules (equals `n` when `max_endpoint` is unset).
    pub covered_dim: usize,
    pub n: usize,
    /// Ordering of the primitive idempotents used for dual endpoints.
    pub idempotent_ordering: Option<Vec<usize>>,
    pub numeric_fallback_used: bool,
}

impl Decomposition {
    pub fn with_endpoint(&self, r: usize) -> impl Iterator<Item = &ModuleDescriptor> {
        self.modules.iter().filter(move |m| m.endpoint == r)
    }
}

/// Context shared by the decomposition steps.
pub(crate) struct Ctx<'a> {
    pub ops: &'a LayerOps,
    pub algebra: Algebra,
}

impl Ctx<'_> {
    /// Smallest subspace containing `seed` (in layer `r`) and invariant
    /// under the generators, as echelon data and spanning vectors per layer.
    pub fn closure(&self, r: usize, seeds: &[Vec<Q>]) -> Vec<Vec<Vec<Q>>> {
        let eps = self.ops.epsilon();
        let mut ech: Vec<Echelon> = vec![Echelon::new(); eps + 1];
        let mut span: Vec<Vec<Vec<Q>>> = vec![Vec::new(); eps + 1];
        let mut queue: Vec<(usize, Vec<Q>)> = Vec::new();
        for s in seeds {
            if ech[r].insert(s) {
                span[r].push(s.clone());
                queue.push((r, s.clone()));
            }
        }
        while let Some((i, v)) = queue.pop() {
            for &op in self.algebra.generators() {
                if let Some(img) = self.ops.apply(op, i, &v) {
                    let t = (i as isize + op.shift()) as usize;
                    if !is_zero_vec(&img) && ech[t].insert(&img) {
                        let img = primitive(&img);
                        span[t].push(img.clone());
                        queue.push((t, img));
                    }
                }
            }
        }
        span.into_iter().map(|s| orthogonal_basis(&s)).collect()
    }

    /// Matrix of `op` from slice `i` to the target slice, in orthogonal-basis coordinates.
    pub fn op_matrix(&self, slices: &[Vec<Vec<Q>>], op: Op, i: usize) -> Option<(usize, Matrix)> {
        let t = i as isize + op.shift();
        if t < 0 || t as usize >= slices.len() {
            return None;
        }
        let t = t as usize;
        let target = &slices[t];
        let norms: Vec<Q> = target.iter().map(|b| dot(b, b)).collect();
        let mut m = vec![vec![Q::zero(); slices[i].len()]; target.len()];
        for (j, v) in slices[i].iter().enumerate() {
            let img = self.ops.apply(op, i, v)?;
            for (k, (b, nb)) in target.iter().zip(&norms).enumerate() {
                m[k][j] = dot(&img, b) / nb;
            }
        }
        Some((t, m))
    }

    /// Dimension of the space of layer-preserving maps commuting with every generator.
    pub fn commutant_dim(&self, slices: &[Vec<Vec<Q>>]) -> usize {
        let dims: Vec<usize> = slices.iter().map(Vec::len).collect();
        let mut offset = vec![0; dims.len() + 1];
        for (i, d) in dims.iter().enumerate() {
            offset[i + 1] = offset[i] + d * d;
        }
        let unknowns = offset[dims.len()];
        let mut rows: Matrix = Vec::new();
        for i in 0..dims.len() {
            if dims[i] == 0 {
                continue;
            }
            for &op in self.algebra.generators() {
                let Some((t, m)) = self.op_matrix(slices, op, i) else { continue };
                if dims[t] == 0 {
                    continue;
                }
                // X_t M - M X_i = 0, entry (a, b) with a < dims[t], b < dims[i].
                for a in 0..dims[t] {
                    for b in 0..dims[i] {
                        let mut row = vec![Q::zero(); unknowns];
                        for c in 0..dims[t] {
                            row[offset[t] + a * dims[t] + c] += &m[c][b];
                        }
                        for c in 0..dims[i] {
                            row[offset[i] + c * dims[i] + b] -= &m[a][c];
                        }
                        if !is_zero_vec(&row) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
        if rows.is_empty() {
            return unknowns;
        }
        nullspace(&rows, unknowns).len()
    }
}

/// Closed walks on the layer path starting and ending at `r`, up to `max_len` letters.
fn closed_words(algebra: Algebra, r: usize, eps: usize, max_len: usize) -> Vec<Vec<Op>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        gens: &[Op],
        layer: usize,
        r: usize,
        eps: usize,
        left: usize,
        cur: &mut Vec<Op>,
        out: &mut Vec<Vec<Op>>,
    ) {
        if layer == r && !cur.is_empty() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for &op in gens {
            let t = layer as isize + op.shift();
            if t < 0 || t as usize > eps || (t as usize).abs_diff(r) > left - 1 {
                continue;
            }
            cur.push(op);
            rec(gens, t as usize, r, eps, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(algebra.generators(), r, r, eps, max_len, &mut cur, &mut out);
    out
}

fn transpose_word(w: &[Op]) -> Vec<Op> {
    w.iter().rev().map(|o| o.transpose()).collect()
}

/// Random symmetric element `Σ c_w (w + wᵀ)` of `E*_r T E*_r` applied to `v`.
struct Splitter {
    r: usize,
    terms: Vec<(i64, Vec<Op>)>,
}

impl Splitter {
    fn new(algebra: Algebra, r: usize, eps: usize, max_len: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut terms = Vec::new();
        for w in closed_words(algebra, r, eps, max_len) {
            let wt = transpose_word(&w);
            if wt < w {
                continue;
            }
            let c = rng.gen_range(1..=97);
            terms.push((c, w.clone()));
            if wt != w {
                terms.push((c, wt));
            }
        }
        Self { r, terms }
    }

    fn apply(&self, ops: &LayerOps, v: &[Q]) -> Vec<Q> {
        if let Some(iv) = v.iter().map(|x| x.to_integer().to_i64().filter(|_| x.is_integer())).collect::<Option<Vec<i64>>>() {
            let iv: Vec<i128> = iv.into_iter().map(i128::from).collect();
            let mut acc = vec![0i128; v.len()];
            for (c, w) in &self.terms {
                if let Some((_, img)) = ops.apply_word(w, self.r, &iv) {
                    for (a, x) in acc.iter_mut().zip(img) {
                        *a += *c as i128 * x;
                    }
                }
            }
            return acc.into_iter().map(|x| Q::from_integer(x.into())).collect();
        }
        let mut acc = vec![Q::zero(); v.len()];
        for (c, w) in &self.terms {
            if let Some((_, img)) = ops.apply_word(w, self.r, v) {
                for (a, x) in acc.iter_mut().zip(img) {
                    *a += q(*c) * x;
                }
            }
        }
        acc
    }
}

/// Integer eigenvalues of `S` on the span of the orthogonal basis `basis`,
/// with exact eigenvectors (in the ambient layer).
fn rational_eigenspaces(s: &Splitter, ops: &LayerOps, basis: &[Vec<Q>]) -> Vec<Vec<Vec<Q>>> {
    let m = basis.len();
    let norms: Vec<Q> = basis.iter().map(|b| dot(b, b)).collect();
    let images: Vec<Vec<Q>> = basis.iter().map(|b| s.apply(ops, b)).collect();
    // coords[k][j] = <S b_j, b_k> / <b_k, b_k>
    let inner: Vec<Vec<Q>> = (0..m).map(|k| (0..m).map(|j| dot(&images[j], &basis[k])).collect()).collect();
    let sym = DMatrix::from_fn(m, m, |k, j| {
        inner[k][j].to_f64().unwrap_or(f64::NAN) / (norms[k].to_f64().unwrap_or(1.0) * norms[j].to_f64().unwrap_or(1.0)).sqrt()
    });
    let eig = nalgebra::SymmetricEigen::new(sym);
    let mut candidates: Vec<i64> = eig
        .eigenvalues
        .iter()
        .filter(|l| (*l - l.round()).abs() < 1e-6 * l.abs().max(1.0))
        .map(|l| l.round() as i64)
        .collect();
    candidates.sort_unstable();
    candidates.dedup();
    let coords: Matrix = (0..m).map(|k| (0..m).map(|j| &inner[k][j] / &norms[k]).collect()).collect();
    let mut out = Vec::new();
    for lambda in candidates {
        let mut shifted = coords.clone();
        for (k, row) in shifted.iter_mut().enumerate() {
            row[k] -= q(lambda);
        }
        let null = nullspace(&shifted, m);
        if null.is_empty() {
            continue;
        }
        let vecs: Vec<Vec<Q>> = null
            .iter()
            .map(|c| {
                let mut v = vec![Q::zero(); basis[0].len()];
                for (ck, b) in c.iter().zip(basis) {
                    if !ck.is_zero() {
                        crate::linalg::axpy(&mut v, ck, b);
                    }
                }
                primitive(&v)
            })
            .collect();
        out.push(vecs);
    }
    out
}

/// Vectors of `span(cands)` orthogonal to every vector of `found`
/// (`found` pairwise orthogonal).
fn avoid(cands: &[Vec<Q>], found: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if found.is_empty() {
        return cands.to_vec();
    }
    let gram: Matrix = found.iter().map(|f| cands.iter().map(|c| dot(c, f)).collect()).collect();
    nullspace(&gram, cands.len())
        .iter()
        .map(|coef| {
            let mut v = vec![Q::zero(); cands[0].len()];
            for (ck, c) in coef.iter().zip(cands) {
                if !ck.is_zero() {
                    crate::linalg::axpy(&mut v, ck, c);
                }
            }
            primitive(&v)
        })
        .collect()
}

/// Orthogonal basis of `E*_rV ∩ (found)^⊥`.
fn remaining(k: usize, found: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if found.is_empty() {
        return (0..k)
            .map(|i| {
                let mut e = vec![Q::zero(); k];
                e[i] = q(1);
                e
            })
            .collect();
    }
    orthogonal_basis(&nullspace(&found.to_vec(), k))
}

/// (endpoint, per-layer slices, certified irreducible, numeric fallback)
type RawModule = (usize, Vec<Vec<Vec<Q>>>, bool, bool);

/// Splits the standard module at base `x` into irreducible modules.
///
/// For each endpoint `r` in turn, the part `N_r` of `E*_rV` orthogonal to
/// the modules already found is diagonalised under a seeded random
/// symmetric element of `E*_r T E*_r`. Each exact eigenvector generates a
/// module; it is kept once its commutant is one-dimensional, which proves
/// irreducibility.
pub fn decompose(g: &Graph, x: usize, opts: &DecomposeOptions) -> Result<Decomposition> {
    let dp = bfs_layers(g, x)?;
    let ops = LayerOps::new(g, &dp);
    let eps = ops.epsilon();
    let ctx = Ctx { ops: &ops, algebra: opts.algebra };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut found: Vec<Vec<Vec<Q>>> = vec![Vec::new(); eps + 1];
    let mut raw: Vec<RawModule> = Vec::new();
    let mut numeric_fallback_used = false;
    let last = opts.max_endpoint.unwrap_or(eps).min(eps);

    let mut accept = |slices: Vec<Vec<Vec<Q>>>, r: usize, irreducible: bool, numeric: bool, found: &mut Vec<Vec<Vec<Q>>>| {
        for (i, s) in slices.iter().enumerate() {
            found[i].extend(s.iter().cloned());
        }
        raw.push((r, slices, irreducible, numeric));
    };

    for r in 0..=last {
        let mut attempt = 0;
        loop {
            let rest = remaining(ops.size(r), &found[r]);
            if rest.is_empty() {
                break;
            }
            if attempt >= opts.attempts {
                // Give up on exact splitting: keep cyclic modules as they come.
                numeric_fallback_used = true;
                let slices = ctx.closure(r, &rest[..1]);
                let irreducible = ctx.commutant_dim(&slices) == 1;
                accept(slices, r, irreducible, !irreducible, &mut found);
                continue;
            }
            let splitter = Splitter::new(opts.algebra, r, eps, 4 + 2 * attempt, &mut rng);
            let spaces = rational_eigenspaces(&splitter, &ops, &rest);
            let mut clean = true;
            'spaces: for space in spaces {
                loop {
                    let avail = avoid(&space, &found[r]);
                    let Some(u) = avail.first() else { break };
                    let slices = ctx.closure(r, std::slice::from_ref(u));
                    if ctx.commutant_dim(&slices) != 1 {
                        clean = false;
                        break 'spaces;
                    }
                    accept(slices, r, true, false, &mut found);
                }
            }
            if !clean || !remaining(ops.size(r), &found[r]).is_empty() {
                attempt += 1;
            }
        }
    }

    let mut modules: Vec<ModuleDescriptor> =
        raw.into_iter().map(|(r, slices, irr, num)| describe(&ctx, r, slices, irr, num)).collect();
    let mut ordering = None;
    if opts.dual_endpoints && opts.algebra == Algebra::T {
        if let Some((pi, order)) = idempotents_for(g) {
            for m in &mut modules {
                m.dual_endpoint = dual_endpoint(&pi, &order, &m.global_basis(&ops));
            }
            ordering = Some(order);
        }
    }
    let covered_dim = modules.iter().map(|m| m.dim).sum();
    Ok(Decomposition {
        base: x,
        algebra: opts.algebra,
        modules,
        covered_dim,
        n: g.n(),
        idempotent_ordering: ordering,
        numeric_fallback_used,
    })
}

fn describe(ctx: &Ctx, r: usize, slices: Vec<Vec<Vec<Q>>>, irreducible: bool, numeric: bool) -> ModuleDescriptor {
    let layer_dims_full: Vec<usize> = slices.iter().map(Vec::len).collect();
    let top = layer_dims_full.iter().rposition(|&d| d > 0).unwrap_or(r);
    let layer_dims = layer_dims_full[r..=top].to_vec();
    let thin = layer_dims.iter().all(|&d| d <= 1);
    let (mut local, mut flat_matrix) = (None, None);
    if ctx.algebra == Algebra::T {
        if let Some((_, m)) = ctx.op_matrix(&slices, Op::F, r) {
            if thin {
                local = Some(m[0][0].clone());
            } else {
                flat_matrix = Some(m);
            }
        }
    }
    ModuleDescriptor {
        algebra: ctx.algebra,
        endpoint: r,
        diameter: top - r,
        dim: layer_dims.iter().sum(),
        layer_dims,
        thin,
        dual_endpoint: None,
        local_eigenvalue: local,
        flat_matrix,
        certified_irreducible: irreducible,
        numeric_fallback: numeric,
        slices,
    }
}

/// Primitive idempotents in a Q-polynomial ordering when one exists (the
/// natural ordering is preferred), else in the natural ordering.
pub(crate) fn idempotents_for(g: &Graph) -> Option<(PrimitiveIdempotents, Vec<usize>)> {
    let ia = intersection_array(g).ok()?;
    let spec = spectrum(&ia, 1e-9);
    let pi = primitive_idempotents(g, &spec).ok()?;
    let natural: Vec<usize> = (0..=ia.diameter()).collect();
    let order = krein_parameters(&spec, 1e-9)
        .ok()
        .map(|kt| q_polynomial_orderings(&kt))
        .and_then(|os| if os.contains(&natural) { Some(natural.clone()) } else { os.into_iter().next() })
        .unwrap_or(natural);
    Some((pi, order))
}

/// Position (in `order`) of the first primitive idempotent not killing the span of `basis`.
pub(crate) fn dual_endpoint(pi: &PrimitiveIdempotents, order: &[usize], basis: &[Vec<Q>]) -> Option<usize> {
    let sums: Vec<Vec<Vec<Q>>> = basis.iter().map(|b| distance_sums(pi, b)).collect();
    order.iter().position(|&i| {
        sums.iter().any(|s| s.iter().any(|row| !dot(row, pi.coefficients(i)).is_zero()))
    })
}

/// `S[y][l] = Σ_{∂(y,z) = l} v_z`, so that `(E_i v)_y = Σ_l S[y][l] (m_i/n) u_l(θ_i)`.
pub(crate) fn distance_sums(pi: &PrimitiveIdempotents, v: &[Q]) -> Vec<Vec<Q>> {
    let d = pi.coefficients(0).len();
    let dist = pi.distances();
    let ints: Option<Vec<i64>> = v.iter().map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten()).collect();
    (0..pi.n())
        .map(|y| match &ints {
            Some(iv) => {
                let mut s = vec![0i128; d];
                for (z, &l) in dist.row(y).iter().enumerate() {
                    s[l as usize] += iv[z] as i128;
                }
                s.into_iter().map(|x| Q::from_integer(x.into())).collect()
            }
            None => {
                let mut s = vec![Q::zero(); d];
                for (z, &l) in dist.row(y).iter().enumerate() {
                    s[l as usize] += &v[z];
                }
                s
            }
        })
        .collect()
}
