//! Fox-Neuwirth cochain complexes for symmetric and alternating groups.
//!
//! `FN_n^*` is spanned by sequences of `n-1` non-negative integers summing to
//! the degree; `FNA_n^*` by the same sequences with a charge. The
//! differential increments one entry and sums over shuffles of the
//! neighbouring blocks, with charge tracking the orientation of the induced
//! permutation of configuration points.
//!
//! Edge convention: when one side of the incremented entry has no blocks,
//! the empty side still counts as a single empty block, so there are always
//! `p, q >= 1` blocks to shuffle. This is pinned by requiring the r = s = 0
//! special case of the differential to produce the conjugation-invariant
//! doubled term.

use std::collections::BTreeSet;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::f2::{self, BitMatrix, BitVec, RowSpan};

/// Charge (orientation) of an alternating-group cochain.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Charge {
    Plus,
    Minus,
}

impl Charge {
    pub fn flip(self) -> Charge {
        match self {
            Charge::Plus => Charge::Minus,
            Charge::Minus => Charge::Plus,
        }
    }

    pub fn mul(self, other: Charge) -> Charge {
        if self == other {
            Charge::Plus
        } else {
            Charge::Minus
        }
    }
}

/// A sequence of `n-1` non-negative integers indexing a cell for `n` points.
pub type Seq = Vec<u32>;

/// A charged sequence, the `FNA` basis element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ChargedSeq {
    pub seq: Seq,
    pub charge: Charge,
}

impl ChargedSeq {
    pub fn new(seq: Seq, charge: Charge) -> Self {
        ChargedSeq { seq, charge }
    }

    pub fn degree(&self) -> u32 {
        self.seq.iter().sum()
    }

    pub fn points(&self) -> usize {
        self.seq.len() + 1
    }
}

impl fmt::Display for ChargedSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]^{}", if self.charge == Charge::Plus { "+" } else { "-" })
    }
}

/// GF(2) formal sum of charged sequences of a common length and degree.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Cochain {
    pub terms: BTreeSet<ChargedSeq>,
}

impl Cochain {
    pub fn zero() -> Self {
        Cochain { terms: BTreeSet::new() }
    }

    pub fn single(seq: Seq, charge: Charge) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(ChargedSeq::new(seq, charge));
        Cochain { terms }
    }

    /// `Γ^o = Γ^+ + Γ^-`.
    pub fn neutral(seq: Seq) -> Self {
        let mut c = Self::single(seq.clone(), Charge::Plus);
        c.toggle(ChargedSeq::new(seq, Charge::Minus));
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn toggle(&mut self, t: ChargedSeq) {
        if !self.terms.remove(&t) {
            self.terms.insert(t);
        }
    }

    pub fn add(&mut self, other: &Cochain) {
        for t in &other.terms {
            self.toggle(t.clone());
        }
    }

    pub fn sum(items: impl IntoIterator<Item = Cochain>) -> Cochain {
        let mut acc = Cochain::zero();
        for c in items {
            acc.add(&c);
        }
        acc
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Print conjugate pairs as ^o for readability.
        let mut done: BTreeSet<ChargedSeq> = BTreeSet::new();
        let mut parts = Vec::new();
        for t in &self.terms {
            if done.contains(t) {
                continue;
            }
            let partner = ChargedSeq::new(t.seq.clone(), t.charge.flip());
            if self.terms.contains(&partner) {
                done.insert(partner);
                let body: Vec<String> = t.seq.iter().map(|a| a.to_string()).collect();
                parts.push(format!("[{}]^o", body.join(",")));
            } else {
                parts.push(t.to_string());
            }
            done.insert(t.clone());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// GF(2) formal sum of plain sequences (symmetric-group complex).
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct FnCochain {
    pub terms: BTreeSet<Seq>,
}

impl FnCochain {
    pub fn zero() -> Self {
        FnCochain { terms: BTreeSet::new() }
    }

    pub fn single(seq: Seq) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(seq);
        FnCochain { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn toggle(&mut self, t: Seq) {
        if !self.terms.remove(&t) {
            self.terms.insert(t);
        }
    }

    pub fn add(&mut self, other: &FnCochain) {
        for t in &other.terms {
            self.toggle(t.clone());
        }
    }
}

/// The `ℓ`-blocks of a sequence: maximal runs of entries `> ℓ`, delimited by
/// entries `<= ℓ` and virtual boundaries. An empty sequence has one empty
/// block; `k` delimiters produce `k+1` blocks.
pub fn ell_blocks(seq: &[u32], ell: u32) -> Vec<Vec<u32>> {
    let mut blocks = vec![Vec::new()];
    for &a in seq {
        if a > ell {
            blocks.last_mut().unwrap().push(a);
        } else {
            blocks.push(Vec::new());
        }
    }
    blocks
}

fn join_blocks(blocks: &[Vec<u32>], delim: u32) -> Seq {
    let mut out = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        if i > 0 {
            out.push(delim);
        }
        out.extend_from_slice(b);
    }
    out
}

/// The `i`-th component of the differential on a single charged sequence,
/// `1 <= i <= n-1`. Output terms carry integer multiplicities reduced mod 2.
pub fn differential_component(seq: &[u32], charge: Charge, i: usize) -> Cochain {
    assert!(i >= 1 && i <= seq.len());
    let a = seq[i - 1];
    let mut inc = seq.to_vec();
    inc[i - 1] += 1;

    // Maximal run of entries > a containing position i (0-based i-1).
    let mut lo = i - 1;
    while lo > 0 && inc[lo - 1] > a {
        lo -= 1;
    }
    let mut hi = i - 1;
    while hi + 1 < inc.len() && inc[hi + 1] > a {
        hi += 1;
    }

    // (a+1)-blocks of the parts strictly left and right of position i,
    // each as a standalone sequence (empty part -> one empty block).
    let left = ell_blocks(&inc[lo..i - 1], a + 1);
    let right = ell_blocks(&inc[i..=hi], a + 1);

    let mut mult: HashMap<(Seq, bool), usize> = HashMap::new();
    for sh in f2::shuffles(left.len(), right.len()) {
        // Orientation: permuting point groups; a block of k entries spans
        // k+1 points, so each inverted pair contributes the product of
        // point counts.
        let mut right_points_seen = 0usize;
        let mut parity = 0usize;
        let mut arranged: Vec<&Vec<u32>> = Vec::with_capacity(left.len() + right.len());
        let mut li = 0;
        let mut ri = 0;
        for &slot in &sh.pattern {
            if slot {
                right_points_seen += right[ri].len() + 1;
                arranged.push(&right[ri]);
                ri += 1;
            } else {
                parity += (left[li].len() + 1) * right_points_seen;
                arranged.push(&left[li]);
                li += 1;
            }
        }
        let blocks: Vec<Vec<u32>> = arranged.into_iter().cloned().collect();
        let mid = join_blocks(&blocks, a + 1);
        let mut out = Vec::with_capacity(inc.len());
        out.extend_from_slice(&inc[..lo]);
        out.extend_from_slice(&mid);
        out.extend_from_slice(&inc[hi + 1..]);
        *mult.entry((out, parity % 2 == 1)).or_insert(0) += 1;
    }

    let mut result = Cochain::zero();
    for ((s, flip), m) in mult {
        if m % 2 == 1 {
            let c = if flip { charge.flip() } else { charge };
            result.toggle(ChargedSeq::new(s, c));
        }
    }
    result
}

/// Full differential of a charged sequence.
pub fn differential_charged(seq: &[u32], charge: Charge) -> Cochain {
    let mut acc = Cochain::zero();
    for i in 1..=seq.len() {
        acc.add(&differential_component(seq, charge, i));
    }
    acc
}

/// Differential extended linearly to cochains.
pub fn differential_fna(x: &Cochain) -> Cochain {
    let mut acc = Cochain::zero();
    for t in &x.terms {
        acc.add(&differential_charged(&t.seq, t.charge));
    }
    acc
}

/// Symmetric-group differential: the charge-forgetting image of the charged
/// differential applied to either lift.
pub fn differential_fn(x: &FnCochain) -> FnCochain {
    let mut acc = FnCochain::zero();
    for t in &x.terms {
        let d = differential_charged(t, Charge::Plus);
        for u in &d.terms {
            acc.toggle(u.seq.clone());
        }
    }
    acc
}

/// Transfer: forget charge, `Γ^± -> Γ` (conjugate pairs cancel).
pub fn transfer_chain(x: &Cochain) -> FnCochain {
    let mut acc = FnCochain::zero();
    for t in &x.terms {
        acc.toggle(t.seq.clone());
    }
    acc
}

/// Restriction: `Γ -> Γ^+ + Γ^-`.
pub fn restrict_chain(x: &FnCochain) -> Cochain {
    let mut acc = Cochain::zero();
    for t in &x.terms {
        acc.add(&Cochain::neutral(t.clone()));
    }
    acc
}

/// Conjugation: flip every charge.
pub fn conjugate_chain(x: &Cochain) -> Cochain {
    let mut acc = Cochain::zero();
    for t in &x.terms {
        acc.toggle(ChargedSeq::new(t.seq.clone(), t.charge.flip()));
    }
    acc
}

/// GF(2) sum of tensor pairs of charged sequences.
pub type TensorCochain = BTreeSet<(ChargedSeq, ChargedSeq)>;

/// Cellular coproduct for the split into `i + j` points: a term survives if
/// the entry at the point boundary is zero, and splits with the charge rule
/// `Γ^± -> Σ_ε left^ε ⊗ right^(ε·±)`.
pub fn coproduct_chain(x: &Cochain, i: usize, j: usize) -> Result<TensorCochain> {
    if i == 0 || j == 0 {
        return Err(Error::Parameter(format!("coproduct split ({i},{j}) must be proper")));
    }
    let mut out: TensorCochain = BTreeSet::new();
    for t in &x.terms {
        if t.points() != i + j {
            return Err(Error::Parameter(format!(
                "coproduct split ({i},{j}) does not match {} points",
                t.points()
            )));
        }
        // Entry index i (1-based) sits between points i and i+1.
        if t.seq[i - 1] != 0 {
            continue;
        }
        let left: Seq = t.seq[..i - 1].to_vec();
        let right: Seq = t.seq[i..].to_vec();
        for eps in [Charge::Plus, Charge::Minus] {
            let pair = (
                ChargedSeq::new(left.clone(), eps),
                ChargedSeq::new(right.clone(), eps.mul(t.charge)),
            );
            if !out.remove(&pair) {
                out.insert(pair);
            }
        }
    }
    Ok(out)
}

/// Chain-level transfer product: shuffle the 0-blocks of the two sequences,
/// charge the product of charges, multiplicities mod 2.
pub fn transfer_product_chain(x: &Cochain, y: &Cochain) -> Cochain {
    let mut mult: HashMap<ChargedSeq, usize> = HashMap::new();
    for s in &x.terms {
        let sb = ell_blocks(&s.seq, 0);
        for t in &y.terms {
            let tb = ell_blocks(&t.seq, 0);
            let charge = s.charge.mul(t.charge);
            for sh in f2::shuffles(sb.len(), tb.len()) {
                let mut arranged: Vec<&Vec<u32>> = Vec::new();
                let (mut a, mut b) = (0, 0);
                for &slot in &sh.pattern {
                    if slot {
                        arranged.push(&tb[b]);
                        b += 1;
                    } else {
                        arranged.push(&sb[a]);
                        a += 1;
                    }
                }
                let blocks: Vec<Vec<u32>> = arranged.into_iter().cloned().collect();
                *mult.entry(ChargedSeq::new(join_blocks(&blocks, 0), charge)).or_insert(0) += 1;
            }
        }
    }
    let mut out = Cochain::zero();
    for (t, m) in mult {
        if m % 2 == 1 {
            out.toggle(t);
        }
    }
    out
}

/// True iff every term has two consecutive nonzero entries, which forces the
/// restriction to the even product of disjoint transpositions to vanish.
pub fn av_vanishes(x: &Cochain) -> bool {
    x.terms.iter().all(|t| t.seq.windows(2).any(|w| w[0] != 0 && w[1] != 0))
}

// ---------------------------------------------------------------------------
// Named cochain constructors
// ---------------------------------------------------------------------------

fn repeat_blocks(blocks: Vec<Vec<u32>>) -> Seq {
    join_blocks(&blocks, 0)
}

fn ones(k: u32) -> Vec<u32> {
    vec![1; k as usize]
}

/// `α^±_{ℓ,m}`: `m` blocks of `2^ℓ - 1` ones.
pub fn alpha(l: u32, m: u32, charge: Charge) -> Cochain {
    assert!(l >= 2 && m >= 1);
    let blocks = vec![ones((1 << l) - 1); m as usize];
    Cochain::single(repeat_blocks(blocks), charge)
}

/// `β_{ℓ,m}(i,j)^o`: `m+1` blocks, the `i`-th a singleton two, the `j`-th a
/// run of `2^ℓ - 3` ones, the rest full runs of `2^ℓ - 1` ones.
pub fn beta_ij(l: u32, m: u32, i: u32, j: u32) -> Cochain {
    assert!(l >= 2 && m >= 1 && i >= 1 && i < j && j <= m + 1);
    let mut blocks = vec![ones((1 << l) - 1); (m + 1) as usize];
    blocks[(i - 1) as usize] = vec![2];
    blocks[(j - 1) as usize] = ones((1 << l) - 3);
    Cochain::neutral(repeat_blocks(blocks))
}

/// `β^o_{ℓ,m} = Σ_{i<j} β_{ℓ,m}(i,j)^o`.
pub fn beta_sum(l: u32, m: u32) -> Cochain {
    let mut acc = Cochain::zero();
    for i in 1..=m {
        for j in (i + 1)..=(m + 1) {
            acc.add(&beta_ij(l, m, i, j));
        }
    }
    acc
}

/// `γ^±_{ℓ,m} = α^± + β^o`, a cocycle representing the charged generator.
pub fn gamma(l: u32, m: u32, charge: Charge) -> Cochain {
    let mut c = alpha(l, m, charge);
    c.add(&beta_sum(l, m));
    c
}

/// `σ_{ℓ,m}(p; r)^o`: `m` blocks, the `p`-th a run of `r` ones, the rest
/// full runs of `2^ℓ - 1` ones.
pub fn sigma(l: u32, m: u32, p: u32, r: u32) -> Cochain {
    assert!(m >= 1 && p >= 1 && p <= m);
    let mut blocks = vec![ones((1 << l) - 1); m as usize];
    blocks[(p - 1) as usize] = ones(r);
    Cochain::neutral(repeat_blocks(blocks))
}

/// `τ_{ℓ,m}(p,q; r,s)^o`: `m` blocks, the `p`-th a run of `r` ones, the
/// `q`-th a run of `s` ones, the rest full.
pub fn tau(l: u32, m: u32, p: u32, q: u32, r: u32, s: u32) -> Cochain {
    assert!(m >= 2 && p >= 1 && p < q && q <= m);
    let mut blocks = vec![ones((1 << l) - 1); m as usize];
    blocks[(p - 1) as usize] = ones(r);
    blocks[(q - 1) as usize] = ones(s);
    Cochain::neutral(repeat_blocks(blocks))
}

/// Increment the `k`-th entry (1-based) of every term.
pub fn bump(x: &Cochain, k: usize) -> Cochain {
    let mut out = Cochain::zero();
    for t in &x.terms {
        let mut s = t.seq.clone();
        s[k - 1] += 1;
        out.toggle(ChargedSeq::new(s, t.charge));
    }
    out
}

/// `α_{2,m}(2)`: `m` blocks of three repeated twos (the square of the
/// level-two symmetric generator at chain level).
pub fn alpha_two(m: u32, charge: Charge) -> Cochain {
    assert!(m >= 1);
    let blocks = vec![vec![2, 2, 2]; m as usize];
    Cochain::single(repeat_blocks(blocks), charge)
}

/// The charged square representative: `α_{2,m}(2)^± + Σ_i (... [3,1,2] ...)^o`
/// where the `i`-th block of the `i`-th summand is `[3,1,2]`.
pub fn gamma2_square_rep(m: u32, charge: Charge) -> Cochain {
    let mut acc = alpha_two(m, charge);
    for i in 0..m as usize {
        let mut blocks = vec![vec![2, 2, 2]; m as usize];
        blocks[i] = vec![3, 1, 2];
        acc.add(&Cochain::neutral(repeat_blocks(blocks)));
    }
    acc
}

/// `α_{ℓ,m}(1.5)`: `m` blocks `[2,1,2,...,1,2]` of length `2^ℓ - 1`.
pub fn alpha_onefive(l: u32, m: u32, charge: Charge) -> Cochain {
    assert!(l >= 2 && m >= 1);
    let len = (1usize << l) - 1;
    let block: Vec<u32> = (0..len).map(|i| if i % 2 == 0 { 2 } else { 1 }).collect();
    let blocks = vec![block; m as usize];
    Cochain::single(repeat_blocks(blocks), charge)
}

// ---------------------------------------------------------------------------
// Cohomology by elimination
// ---------------------------------------------------------------------------

/// Which complex to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    Fn,
    Fna,
}

/// Maximum number of matrix bits allowed for one differential.
const SIZE_CAP_BITS: u64 = 400_000_000;

/// Basis of `FNA_n` in one degree: compositions in lexicographic order, each
/// with `+` before `-`.
pub fn fna_basis(n: usize, d: u32) -> Vec<ChargedSeq> {
    let mut out = Vec::new();
    for comp in f2::compositions(d, n - 1) {
        out.push(ChargedSeq::new(comp.clone(), Charge::Plus));
        out.push(ChargedSeq::new(comp, Charge::Minus));
    }
    out
}

pub fn fn_basis(n: usize, d: u32) -> Vec<Seq> {
    f2::compositions(d, n - 1)
}

/// Cocycle representatives and dimension data for one `(n, degree)` cell.
pub struct CohomologyBasis {
    pub n: usize,
    pub degree: u32,
    pub variant: Variant,
    pub dim: usize,
    pub coboundary_rank: usize,
    /// Basis of the cochain group in the fixed deterministic order.
    pub basis: Vec<ChargedSeq>,
    /// Reduced-echelon representatives of kernel modulo image.
    pub reps: Vec<Cochain>,
    rep_rows: Vec<BitVec>,
    image_rows: Vec<BitVec>,
}

fn fna_matrix(n: usize, d: u32) -> Result<(Vec<ChargedSeq>, Vec<ChargedSeq>, BitMatrix)> {
    let dom = fna_basis(n, d);
    let cod = fna_basis(n, d + 1);
    let bits = dom.len() as u64 * cod.len() as u64;
    if bits > SIZE_CAP_BITS {
        return Err(Error::Resource { what: "FNA differential".into(), n, degree: d as usize });
    }
    let index: HashMap<&ChargedSeq, usize> = cod.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = BitMatrix::zeros(dom.len(), cod.len());
    for (r, cs) in dom.iter().enumerate() {
        let d = differential_charged(&cs.seq, cs.charge);
        for t in &d.terms {
            m.set(r, index[t], true);
        }
    }
    Ok((dom, cod, m))
}

fn fn_matrix(n: usize, d: u32) -> Result<(Vec<Seq>, Vec<Seq>, BitMatrix)> {
    let dom = fn_basis(n, d);
    let cod = fn_basis(n, d + 1);
    let bits = dom.len() as u64 * cod.len() as u64;
    if bits > SIZE_CAP_BITS {
        return Err(Error::Resource { what: "FN differential".into(), n, degree: d as usize });
    }
    let index: HashMap<&Seq, usize> = cod.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = BitMatrix::zeros(dom.len(), cod.len());
    for (r, s) in dom.iter().enumerate() {
        let d = differential_fn(&FnCochain::single(s.clone()));
        for t in &d.terms {
            m.set(r, index[t], true);
        }
    }
    Ok((dom, cod, m))
}

/// Dimension of `H^d` without representatives (cheaper).
pub fn cohomology_dim(n: usize, d: u32, variant: Variant) -> Result<usize> {
    match variant {
        Variant::Fna => {
            let (dom, _, m) = fna_matrix(n, d)?;
            let rank_d = m.rank();
            let rank_prev = if d == 0 { 0 } else { fna_matrix(n, d - 1)?.2.rank() };
            Ok(dom.len() - rank_d - rank_prev)
        }
        Variant::Fn => {
            let (dom, _, m) = fn_matrix(n, d)?;
            let rank_d = m.rank();
            let rank_prev = if d == 0 { 0 } else { fn_matrix(n, d - 1)?.2.rank() };
            Ok(dom.len() - rank_d - rank_prev)
        }
    }
}

/// Full cohomology data with deterministic representatives (FNA variant).
pub fn cohomology(n: usize, d: u32, variant: Variant) -> Result<CohomologyBasis> {
    assert!(n >= 2);
    match variant {
        Variant::Fna => cohomology_fna(n, d),
        Variant::Fn => Err(Error::Parameter(
            "representatives are computed for the charged complex; use cohomology_dim for FN"
                .into(),
        )),
    }
}

fn cohomology_fna(n: usize, d: u32) -> Result<CohomologyBasis> {
    let (dom, _cod, m) = fna_matrix(n, d)?;
    // Cocycles are left-kernel vectors of the differential matrix.
    let kernel = m.transpose().kernel_basis();

    // Image of the previous differential, as vectors in this degree.
    let image_rows: Vec<BitVec> = if d == 0 {
        Vec::new()
    } else {
        let (_pdom, _pcod, pm) = fna_matrix(n, d - 1)?;
        let mut rows: Vec<BitVec> = (0..pm.rows()).map(|r| pm.row(r)).collect();
        rows.retain(|r| !r.is_zero());
        let mut mat = BitMatrix::from_rows(&rows);
        let pivots = mat.echelonize();
        (0..pivots.len()).map(|r| mat.row(r)).collect()
    };
    let coboundary_rank = image_rows.len();

    // Reduce kernel vectors against the image; keep those adding new pivots.
    let mut span_rows: Vec<BitVec> = image_rows.clone();
    let mut pivot_cols: Vec<usize> = span_rows.iter().map(|r| r.ones()[0]).collect();
    let mut rep_rows: Vec<BitVec> = Vec::new();
    for kv in kernel {
        let mut v = kv;
        loop {
            let Some(lead) = v.ones().first().copied() else { break };
            if let Some(pos) = pivot_cols.iter().position(|&p| p == lead) {
                let row = span_rows[pos].clone();
                v.xor_assign(&row);
            } else {
                break;
            }
        }
        if !v.is_zero() {
            pivot_cols.push(v.ones()[0]);
            span_rows.push(v.clone());
            rep_rows.push(v);
        }
    }

    let reps: Vec<Cochain> = rep_rows
        .iter()
        .map(|r| {
            let mut c = Cochain::zero();
            for i in r.ones() {
                c.toggle(dom[i].clone());
            }
            c
        })
        .collect();

    Ok(CohomologyBasis {
        n,
        degree: d,
        variant: Variant::Fna,
        dim: reps.len(),
        coboundary_rank,
        basis: dom,
        reps,
        rep_rows,
        image_rows,
    })
}

impl CohomologyBasis {
    fn vector_of(&self, x: &Cochain) -> Result<BitVec> {
        let index: HashMap<&ChargedSeq, usize> =
            self.basis.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut v = BitVec::zeros(self.basis.len());
        for t in &x.terms {
            let Some(&i) = index.get(t) else {
                return Err(Error::Parameter(format!(
                    "term {t} not in the ({}, {}) cochain group",
                    self.n, self.degree
                )));
            };
            v.flip(i);
        }
        Ok(v)
    }

    /// Coordinates of the class of a cocycle in the stored representative
    /// basis. Errors if the input is not a cocycle.
    pub fn identify_class(&self, x: &Cochain) -> Result<BitVec> {
        if !differential_fna(x).is_zero() {
            return Err(Error::Contract("identify_class requires a cocycle".into()));
        }
        let v = self.vector_of(x)?;
        let mut rows = self.rep_rows.clone();
        rows.extend(self.image_rows.iter().cloned());
        if rows.is_empty() {
            if v.is_zero() {
                return Ok(BitVec::zeros(0));
            }
            return Err(Error::Contract("cocycle outside the computed span".into()));
        }
        let span = RowSpan::new(&BitMatrix::from_rows(&rows));
        let combo = span
            .solve(&v)
            .ok_or_else(|| Error::Contract("cocycle outside kernel + image span".into()))?;
        let mut out = BitVec::zeros(self.reps.len());
        for i in combo.ones() {
            if i < self.reps.len() {
                out.set(i, true);
            }
        }
        Ok(out)
    }
}
