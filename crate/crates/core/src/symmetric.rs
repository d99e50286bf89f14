//! The symmetric-group Hopf ring, its Gysin bases, and the Nakaoka
//! homology oracle.
//!
//! Classes live on components `BS_n` (n = number of points). The additive
//! basis is made of Hopf monomials: transfer products of "gathered"
//! cup-monomial columns with pairwise distinct exponent profiles, plus at
//! most one unit column. Canonicity of the enumeration is certified against
//! the Nakaoka count and Fox-Neuwirth elimination rather than assumed.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::f2::binom_mod2;

// ---------------------------------------------------------------------------
// Dyer-Lashof monomials, Adem reduction, Nakaoka basis
// ---------------------------------------------------------------------------

/// `q_{i_1} ∘ ... ∘ q_{i_k}` in lower notation, outermost first.
/// Degree `Σ i_j 2^(j-1)`, width `2^k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QMonomial(pub Vec<u32>);

impl QMonomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().enumerate().map(|(j, &i)| i << j).sum()
    }

    pub fn width(&self) -> usize {
        1 << self.0.len()
    }

    pub fn is_admissible(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_strongly_admissible(&self) -> bool {
        self.is_admissible() && self.0.iter().all(|&i| i >= 1)
    }
}

/// Rewrite a composite of lower operations into a GF(2) sum of admissible
/// monomials using `q_m q_n = Σ binom(i-n-1, 2i-m-n) q_{m+2n-2i} q_i`.
pub fn adem_reduce(composite: &[u32]) -> Result<BTreeSet<QMonomial>> {
    let mut memo: HashMap<Vec<u32>, BTreeSet<QMonomial>> = HashMap::new();
    let mut steps = 0usize;
    reduce_rec(composite.to_vec(), &mut memo, &mut steps)
}

fn reduce_rec(
    word: Vec<u32>,
    memo: &mut HashMap<Vec<u32>, BTreeSet<QMonomial>>,
    steps: &mut usize,
) -> Result<BTreeSet<QMonomial>> {
    if let Some(hit) = memo.get(&word) {
        return Ok(hit.clone());
    }
    *steps += 1;
    if *steps > 2_000_000 {
        return Err(Error::Contract("adem rewriting exceeded its step cap".into()));
    }
    let pos = word.windows(2).position(|w| w[0] > w[1]);
    let Some(k) = pos else {
        let mut s = BTreeSet::new();
        s.insert(QMonomial(word.clone()));
        memo.insert(word, s.clone());
        return Ok(s);
    };
    let (m, n) = (word[k] as i64, word[k + 1] as i64);
    let mut acc: BTreeSet<QMonomial> = BTreeSet::new();
    let lo = (m + n).div_euclid(2) + ((m + n) % 2 != 0) as i64;
    for i in lo..=(m - 1) {
        let a = i - n - 1;
        let b = 2 * i - m - n;
        if a < 0 || b < 0 || b > a {
            continue;
        }
        if !binom_mod2(a as u64, b as u64) {
            continue;
        }
        let first = m + 2 * n - 2 * i;
        if first < 0 {
            continue;
        }
        let mut next = word.clone();
        next[k] = first as u32;
        next[k + 1] = i as u32;
        for t in reduce_rec(next, memo, steps)? {
            if !acc.remove(&t) {
                acc.insert(t);
            }
        }
    }
    memo.insert(word, acc.clone());
    Ok(acc)
}

/// A Nakaoka basis element: a `*`-monomial in strongly admissible `q_I`
/// applied to the point class, padded with bare points.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct NakaokaMonomial {
    pub factors: BTreeMap<QMonomial, u32>,
    pub iotas: u32,
}

impl NakaokaMonomial {
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(q, &e)| q.degree() * e).sum()
    }

    pub fn width(&self) -> usize {
        self.factors.iter().map(|(q, &e)| q.width() * e as usize).sum::<usize>()
            + self.iotas as usize
    }
}

fn strongly_admissible(max_len: u32, max_degree: u32) -> Vec<QMonomial> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(cur: &mut Vec<u32>, max_len: u32, max_degree: u32, out: &mut Vec<QMonomial>) {
        if !cur.is_empty() {
            out.push(QMonomial(cur.clone()));
        }
        if cur.len() as u32 == max_len {
            return;
        }
        let min = cur.last().copied().unwrap_or(1);
        let pos = cur.len() as u32; // next index contributes i * 2^pos
        let mut i = min;
        loop {
            let base: u32 = cur.iter().enumerate().map(|(j, &v)| v << j).sum();
            if base + (i << pos) > max_degree {
                break;
            }
            cur.push(i);
            rec(cur, max_len, max_degree, out);
            cur.pop();
            i += 1;
        }
    }
    rec(&mut cur, max_len, max_degree, &mut out);
    out.sort();
    out
}

/// All Nakaoka monomials of total width `n` and degree `d`; the count is the
/// Betti-number oracle for `dim H^d(BS_n)`.
pub fn nakaoka_basis(n: usize, d: u32) -> Vec<NakaokaMonomial> {
    let mut max_len = 0u32;
    while (1usize << (max_len + 1)) <= n {
        max_len += 1;
    }
    let gens = strongly_admissible(max_len.max(1), d);
    let mut out = Vec::new();
    fn rec(
        gens: &[QMonomial],
        idx: usize,
        width_left: usize,
        degree_left: u32,
        cur: &mut BTreeMap<QMonomial, u32>,
        out: &mut Vec<NakaokaMonomial>,
    ) {
        if idx == gens.len() {
            if degree_left == 0 {
                out.push(NakaokaMonomial { factors: cur.clone(), iotas: width_left as u32 });
            }
            return;
        }
        let g = &gens[idx];
        let (w, dg) = (g.width(), g.degree());
        let mut e = 0u32;
        loop {
            let used_w = w * e as usize;
            let used_d = dg * e;
            if used_w > width_left || used_d > degree_left {
                break;
            }
            if e > 0 {
                cur.insert(g.clone(), e);
            }
            rec(gens, idx + 1, width_left - used_w, degree_left - used_d, cur, out);
            cur.remove(g);
            e += 1;
        }
    }
    rec(&gens, 0, n, d, &mut BTreeMap::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// Hopf monomials
// ---------------------------------------------------------------------------

/// A gathered cup-monomial column: `∏_ℓ γ_{ℓ, width/2^ℓ}^{e_ℓ}` on `width`
/// points, with at least one positive exponent.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SymColumn {
    pub width: usize,
    pub exps: BTreeMap<u32, u32>,
}

impl SymColumn {
    pub fn new(width: usize, exps: BTreeMap<u32, u32>) -> Self {
        debug_assert!(!exps.is_empty() && exps.values().all(|&e| e > 0));
        debug_assert!(exps.keys().all(|&l| width % (1usize << l) == 0));
        SymColumn { width, exps }
    }

    pub fn generator(level: u32, m: usize) -> Self {
        SymColumn::new(m << level, BTreeMap::from([(level, 1)]))
    }

    pub fn degree(&self) -> u32 {
        self.exps
            .iter()
            .map(|(&l, &e)| e * (self.width as u32 / (1 << l)) * ((1 << l) - 1))
            .sum()
    }

    /// Max level occurring (the column scale).
    pub fn scale(&self) -> u32 {
        *self.exps.keys().max().unwrap()
    }

    /// Divided-power index: width over the base width of the profile.
    fn dp_index(&self) -> usize {
        self.width >> self.scale()
    }

    /// The piece of the column supported on a narrower width, if valid.
    fn piece(&self, width: usize) -> Option<SymColumn> {
        if width == 0 || width > self.width {
            return None;
        }
        let base = 1usize << self.scale();
        if width % base != 0 {
            return None;
        }
        Some(SymColumn { width, exps: self.exps.clone() })
    }
}

/// A Hopf monomial: transfer product of distinct-profile columns and an
/// optional unit column (`unit` = its width in points).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SymMonomial {
    pub cols: Vec<SymColumn>,
    pub unit: usize,
}

impl SymMonomial {
    pub fn one(unit_points: usize) -> Self {
        SymMonomial { cols: vec![], unit: unit_points }
    }

    pub fn from_cols(mut cols: Vec<SymColumn>, unit: usize) -> Option<Self> {
        cols.sort();
        let m = SymMonomial { cols, unit };
        m.gather()
    }

    pub fn width(&self) -> usize {
        self.cols.iter().map(|c| c.width).sum::<usize>() + self.unit
    }

    pub fn degree(&self) -> u32 {
        self.cols.iter().map(|c| c.degree()).sum()
    }

    /// Hopf monomial scale: minimum column scale; units have scale one.
    pub fn scale(&self) -> u32 {
        let col_min = self.cols.iter().map(|c| c.scale()).min();
        match (col_min, self.unit) {
            (Some(s), 0) => s,
            (Some(s), _) => s.min(1),
            (None, _) => 1,
        }
    }

    /// Merge same-profile columns by the divided-power rule
    /// `B_a ⊙ B_b = binom(a+b, a) B_{a+b}`; `None` when a coefficient
    /// vanishes. Result columns are sorted and profile-distinct.
    pub fn gather(&self) -> Option<SymMonomial> {
        let mut groups: BTreeMap<&BTreeMap<u32, u32>, Vec<&SymColumn>> = BTreeMap::new();
        for c in &self.cols {
            groups.entry(&c.exps).or_default().push(c);
        }
        let mut cols = Vec::new();
        for (exps, group) in groups {
            if group.len() == 1 {
                cols.push(group[0].clone());
                continue;
            }
            // multinomial over divided-power indices: odd iff no carries
            let total: usize = group.iter().map(|c| c.dp_index()).sum();
            let bits: u32 = group.iter().map(|c| (c.dp_index() as u64).count_ones()).sum();
            if (total as u64).count_ones() != bits {
                return None;
            }
            let base = 1usize << group[0].scale();
            cols.push(SymColumn { width: total * base, exps: exps.clone() });
        }
        cols.sort();
        Some(SymMonomial { cols, unit: self.unit })
    }
}

impl fmt::Display for SymMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for c in &self.cols {
            let factors: Vec<String> = c
                .exps
                .iter()
                .map(|(&l, &e)| {
                    let m = c.width >> l;
                    if e == 1 {
                        format!("g({l},{m})")
                    } else {
                        format!("g({l},{m})^{e}")
                    }
                })
                .collect();
            parts.push(factors.join("*"));
        }
        if self.unit > 0 {
            parts.push(format!("1({})", self.unit / 2));
        }
        if parts.is_empty() {
            write!(f, "1(0)")
        } else {
            write!(f, "{}", parts.join(" o "))
        }
    }
}

/// GF(2) sum of Hopf monomials on a common component.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SymClass {
    pub terms: BTreeSet<SymMonomial>,
}

impl SymClass {
    pub fn zero() -> Self {
        SymClass { terms: BTreeSet::new() }
    }

    pub fn from_monomial(m: SymMonomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        SymClass { terms }
    }

    /// `γ_{level, m}`; `level = 0` is the unit class on `2m` points.
    pub fn generator(level: u32, m: usize) -> Self {
        if level == 0 {
            return Self::from_monomial(SymMonomial::one(2 * m));
        }
        Self::from_monomial(
            SymMonomial::from_cols(vec![SymColumn::generator(level, m)], 0).unwrap(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn toggle(&mut self, m: SymMonomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add(&mut self, other: &SymClass) {
        for t in &other.terms {
            self.toggle(t.clone());
        }
    }

    pub fn sum(items: impl IntoIterator<Item = SymClass>) -> SymClass {
        let mut acc = SymClass::zero();
        for x in items {
            acc.add(&x);
        }
        acc
    }
}

/// Transfer product of monomials (gathering may kill the result).
pub fn odot_mono(a: &SymMonomial, b: &SymMonomial) -> Option<SymMonomial> {
    let mut cols = a.cols.clone();
    cols.extend(b.cols.iter().cloned());
    cols.sort();
    // units merge with a binomial in pair counts
    let unit = match (a.unit, b.unit) {
        (0, u) | (u, 0) => u,
        (u, v) => {
            if !binom_mod2(((u + v) / 2) as u64, (u / 2) as u64) {
                return None;
            }
            u + v
        }
    };
    SymMonomial { cols, unit }.gather()
}

pub fn odot(a: &SymClass, b: &SymClass) -> SymClass {
    let mut out = SymClass::zero();
    for x in &a.terms {
        for y in &b.terms {
            if let Some(m) = odot_mono(x, y) {
                out.toggle(m);
            }
        }
    }
    out
}

/// All splittings of a monomial into left/right pieces with the given left
/// width, each side gathered; pairs accumulate mod 2.
pub fn splits(m: &SymMonomial, left_width: usize) -> Vec<(SymMonomial, SymMonomial)> {
    let mut acc: BTreeMap<(SymMonomial, SymMonomial), usize> = BTreeMap::new();
    fn rec(
        cols: &[SymColumn],
        unit: usize,
        left_budget: usize,
        left: &mut Vec<SymColumn>,
        right: &mut Vec<SymColumn>,
        acc: &mut BTreeMap<(SymMonomial, SymMonomial), usize>,
    ) {
        if let Some((c, rest)) = cols.split_first() {
            let base = 1usize << c.scale();
            let mut w = 0usize;
            while w <= c.width {
                if w <= left_budget {
                    let pushed_l = w > 0;
                    let pushed_r = w < c.width;
                    if pushed_l {
                        left.push(c.piece(w).unwrap());
                    }
                    if pushed_r {
                        right.push(c.piece(c.width - w).unwrap());
                    }
                    rec(rest, unit, left_budget - w, left, right, acc);
                    if pushed_l {
                        left.pop();
                    }
                    if pushed_r {
                        right.pop();
                    }
                }
                w += base;
            }
            return;
        }
        if left_budget <= unit {
            let l = SymMonomial { cols: left.clone(), unit: left_budget };
            let r = SymMonomial { cols: right.clone(), unit: unit - left_budget };
            if let (Some(l), Some(r)) = (l.gather(), r.gather()) {
                *acc.entry((l, r)).or_insert(0) += 1;
            }
        }
    }
    rec(&m.cols, m.unit, left_width, &mut Vec::new(), &mut Vec::new(), &mut acc);
    acc.into_iter().filter(|(_, c)| c % 2 == 1).map(|(p, _)| p).collect()
}

/// Coproduct into components of `(i, j)` points.
pub fn coproduct_sym(x: &SymClass, i: usize, _j: usize) -> BTreeSet<(SymMonomial, SymMonomial)> {
    let mut out: BTreeSet<(SymMonomial, SymMonomial)> = BTreeSet::new();
    for t in &x.terms {
        for p in splits(t, i) {
            if !out.remove(&p) {
                out.insert(p);
            }
        }
    }
    out
}

/// Cup product of a single column with a monomial of equal width.
fn colcup(c: &SymColumn, x: &SymMonomial) -> SymClass {
    debug_assert_eq!(c.width, x.width());
    if x.cols.is_empty() {
        return SymClass::from_monomial(SymMonomial { cols: vec![c.clone()], unit: 0 });
    }
    let first = &x.cols[0];
    let rest = SymMonomial { cols: x.cols[1..].to_vec(), unit: x.unit };
    // Distributivity against Δc: only the piece matching the first
    // column's width survives the component check.
    let Some(ca) = c.piece(first.width) else { return SymClass::zero() };
    let mut exps = ca.exps.clone();
    for (&l, &e) in &first.exps {
        *exps.entry(l).or_insert(0) += e;
    }
    let merged = SymColumn { width: first.width, exps };
    if c.width == first.width {
        if rest.width() != 0 {
            return SymClass::zero();
        }
        return SymClass::from_monomial(SymMonomial { cols: vec![merged], unit: 0 });
    }
    let Some(cb) = c.piece(c.width - first.width) else { return SymClass::zero() };
    let tail = colcup(&cb, &rest);
    let mut out = SymClass::zero();
    for t in &tail.terms {
        if let Some(m) = odot_mono(&SymMonomial { cols: vec![merged.clone()], unit: 0 }, t) {
            out.toggle(m);
        }
    }
    out
}

/// Cup product of Hopf monomials on the same component.
pub fn cup_mono(a: &SymMonomial, b: &SymMonomial) -> SymClass {
    if a.width() != b.width() {
        return SymClass::zero();
    }
    if a.cols.is_empty() {
        return SymClass::from_monomial(b.clone());
    }
    if b.cols.is_empty() {
        return SymClass::from_monomial(a.clone());
    }
    let c = &a.cols[0];
    let rest = SymMonomial { cols: a.cols[1..].to_vec(), unit: a.unit };
    let mut out = SymClass::zero();
    for (bl, br) in splits(b, c.width) {
        let left = colcup(c, &bl);
        let right = cup_mono(&rest, &br);
        for l in &left.terms {
            for r in &right.terms {
                if let Some(m) = odot_mono(l, r) {
                    out.toggle(m);
                }
            }
        }
    }
    out
}

pub fn cup(a: &SymClass, b: &SymClass) -> SymClass {
    let mut out = SymClass::zero();
    for x in &a.terms {
        for y in &b.terms {
            out.add(&cup_mono(x, y));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Canonical basis enumeration and the Gysin bases
// ---------------------------------------------------------------------------

fn enumerate_columns(width: usize, max_degree: u32) -> Vec<SymColumn> {
    let mut out = Vec::new();
    let mut levels = Vec::new();
    let mut l = 1u32;
    while (1usize << l) <= width {
        if width % (1usize << l) == 0 {
            levels.push(l);
        }
        l += 1;
    }
    fn rec(
        width: usize,
        levels: &[u32],
        idx: usize,
        degree_left: i64,
        cur: &mut BTreeMap<u32, u32>,
        out: &mut Vec<SymColumn>,
    ) {
        if idx == levels.len() {
            if !cur.is_empty() {
                out.push(SymColumn { width, exps: cur.clone() });
            }
            return;
        }
        let l = levels[idx];
        let unit_deg = (width as i64 / (1i64 << l)) * ((1i64 << l) - 1);
        let mut e = 0u32;
        loop {
            let used = unit_deg * e as i64;
            if used > degree_left {
                break;
            }
            if e > 0 {
                cur.insert(l, e);
            }
            rec(width, levels, idx + 1, degree_left - used, cur, out);
            cur.remove(&l);
            e += 1;
        }
    }
    rec(width, &levels, 0, max_degree as i64, &mut BTreeMap::new(), &mut out);
    out
}

/// All canonical Hopf monomials of component `n` points and degree `d`.
pub fn enumerate_monomials(n: usize, d: u32) -> Vec<SymMonomial> {
    let mut by_profile: BTreeMap<BTreeMap<u32, u32>, Vec<SymColumn>> = BTreeMap::new();
    let mut w = 2usize;
    while w <= n {
        for c in enumerate_columns(w, d) {
            by_profile.entry(c.exps.clone()).or_default().push(c);
        }
        w += 2;
    }
    let profiles: Vec<Vec<SymColumn>> = by_profile.into_values().collect();
    let mut out = Vec::new();
    fn rec(
        profiles: &[Vec<SymColumn>],
        idx: usize,
        width_left: usize,
        degree_left: i64,
        cur: &mut Vec<SymColumn>,
        out: &mut Vec<SymMonomial>,
    ) {
        if degree_left < 0 {
            return;
        }
        if idx == profiles.len() {
            if degree_left == 0 {
                let mut cols = cur.clone();
                cols.sort();
                out.push(SymMonomial { cols, unit: width_left });
            }
            return;
        }
        rec(profiles, idx + 1, width_left, degree_left, cur, out);
        for c in &profiles[idx] {
            if c.width <= width_left && (c.degree() as i64) <= degree_left {
                cur.push(c.clone());
                rec(
                    profiles,
                    idx + 1,
                    width_left - c.width,
                    degree_left - c.degree() as i64,
                    cur,
                    out,
                );
                cur.pop();
            }
        }
    }
    rec(&profiles, 0, n, d as i64, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Cached canonical count per `(n, d)`.
pub fn monomial_count(n: usize, d: u32) -> usize {
    static CACHE: Mutex<Option<HashMap<(usize, u32), usize>>> = Mutex::new(None);
    let mut guard = CACHE.lock().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    if let Some(&c) = map.get(&(n, d)) {
        return c;
    }
    let c = enumerate_monomials(n, d).len();
    map.insert((n, d), c);
    c
}

fn scale_one_cols(m: &SymMonomial) -> Vec<&SymColumn> {
    m.cols.iter().filter(|c| c.scale() == 1).collect()
}

/// Quotient-basis membership: the scale-one column with the largest
/// exponent must be wider than two points, or there are none.
pub fn in_gysin_q(m: &SymMonomial) -> bool {
    let s1 = scale_one_cols(m);
    match s1.iter().max_by_key(|c| c.exps[&1]) {
        None => true,
        Some(c) => c.width > 2,
    }
}

/// Annihilator-basis membership: scale greater than one.
pub fn in_gysin_a(m: &SymMonomial) -> bool {
    m.unit == 0 && !m.cols.is_empty() && m.cols.iter().all(|c| c.scale() >= 2)
}

/// Basis monomials of `Ann(e)` in `(n, d)`.
pub fn gysin_a(n: usize, d: u32) -> Vec<SymMonomial> {
    enumerate_monomials(n, d).into_iter().filter(in_gysin_a).collect()
}

/// Representative basis monomials of `H^*(BS_n)/(e)` in `(n, d)`.
pub fn gysin_q(n: usize, d: u32) -> Vec<SymMonomial> {
    enumerate_monomials(n, d).into_iter().filter(in_gysin_q).collect()
}

/// The Euler class `e = γ_{1,1} ⊙ 1_{n/2-1}` on `n` points.
pub fn euler_class(n: usize) -> SymClass {
    SymClass::from_monomial(
        SymMonomial::from_cols(vec![SymColumn::generator(1, 1)], n - 2).unwrap(),
    )
}

// ---------------------------------------------------------------------------
// Symmetric functions: monomial <-> elementary conversion over GF(2)
// ---------------------------------------------------------------------------

/// A partition as weakly decreasing positive parts.
pub type Partition = Vec<u32>;

type Poly = BTreeSet<Vec<u32>>; // GF(2) sums of exponent vectors

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out: Poly = BTreeSet::new();
    for x in a {
        for y in b {
            let z: Vec<u32> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            if !out.remove(&z) {
                out.insert(z);
            }
        }
    }
    out
}

/// `m_λ` in `nvars` variables: all distinct permutations of the padded
/// exponent vector, coefficient one each.
pub fn m_poly(lambda: &Partition, nvars: usize) -> Poly {
    assert!(lambda.len() <= nvars);
    let mut base = lambda.clone();
    base.resize(nvars, 0);
    base.sort_unstable();
    let mut out: Poly = BTreeSet::new();
    loop {
        out.insert(base.clone());
        let Some(i) = (0..nvars.saturating_sub(1)).rev().find(|&i| base[i] < base[i + 1]) else {
            break;
        };
        let j = (i + 1..nvars).rev().find(|&j| base[j] > base[i]).unwrap();
        base.swap(i, j);
        base[i + 1..].reverse();
    }
    out
}

/// `∏ e_k^{c_k}` as a polynomial; `c` is indexed from `k = 1`.
pub fn e_mono_poly(c: &[u32], nvars: usize) -> Poly {
    let mut acc: Poly = BTreeSet::new();
    acc.insert(vec![0; nvars]);
    for (k0, &e) in c.iter().enumerate() {
        let k = k0 + 1;
        if e == 0 {
            continue;
        }
        let ek = m_poly(&vec![1; k], nvars);
        for _ in 0..e {
            acc = poly_mul(&acc, &ek);
        }
    }
    acc
}

/// Express `m_λ` in the elementary basis: a GF(2) set of exponent vectors
/// `(c_1, ..., c_nvars)` meaning `Σ ∏ e_k^{c_k}`.
pub fn m_in_e_basis(lambda: &Partition, nvars: usize) -> BTreeSet<Vec<u32>> {
    let d: u32 = lambda.iter().sum();
    let mut e_monos: Vec<Vec<u32>> = Vec::new();
    fn gen(k: usize, nvars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == nvars {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let kk = (k + 1) as u32;
        let mut e = 0;
        loop {
            if e * kk > left {
                break;
            }
            cur.push(e);
            gen(k + 1, nvars, left - e * kk, cur, out);
            cur.pop();
            e += 1;
        }
    }
    gen(0, nvars, d, &mut Vec::new(), &mut e_monos);

    let target = m_poly(lambda, nvars);
    let mut rows: Vec<(Poly, Vec<u32>)> =
        e_monos.into_iter().map(|c| (e_mono_poly(&c, nvars), c)).collect();
    let mut combo: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut residual = target;
    while !residual.is_empty() {
        let lead = residual.iter().next().unwrap().clone();
        let pos = rows
            .iter()
            .position(|(p, _)| p.contains(&lead))
            .expect("monomial symmetric function not in the elementary span");
        let (p, c) = rows.swap_remove(pos);
        for t in &p {
            if !residual.remove(t) {
                residual.insert(t.clone());
            }
        }
        if !combo.remove(&c) {
            combo.insert(c);
        }
    }
    combo
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foxneuwirth::{cohomology_dim, Variant};

    #[test]
    fn adem_examples() {
        let r = adem_reduce(&[1, 1]).unwrap();
        assert_eq!(r, BTreeSet::from([QMonomial(vec![1, 1])]));
        let r = adem_reduce(&[1, 2]).unwrap();
        assert_eq!(r, BTreeSet::from([QMonomial(vec![1, 2])]));
        // q_3 q_1 = q_1 q_2 (the only feasible i is 2)
        let r = adem_reduce(&[3, 1]).unwrap();
        assert_eq!(r, BTreeSet::from([QMonomial(vec![1, 2])]));
        // q_2 q_1 has an empty feasible range
        let r = adem_reduce(&[2, 1]).unwrap();
        assert!(r.is_empty());
        for word in [vec![4, 1], vec![5, 2], vec![3, 1, 2], vec![4, 2, 1]] {
            let deg = QMonomial(word.clone()).degree();
            for t in adem_reduce(&word).unwrap() {
                assert_eq!(t.degree(), deg);
                assert!(t.is_admissible());
            }
        }
    }

    #[test]
    fn nakaoka_small_counts() {
        for d in 1..8 {
            assert_eq!(nakaoka_basis(2, d).len(), 1, "BS_2 degree {d}");
        }
        assert_eq!(nakaoka_basis(2, 0).len(), 1);
        let q = QMonomial(vec![1, 1]);
        assert_eq!(q.degree(), 3);
        assert_eq!(q.width(), 4);
    }

    #[test]
    fn nakaoka_matches_fn_cohomology_bs4() {
        for d in 0..=6u32 {
            let nak = nakaoka_basis(4, d).len();
            let fnd = cohomology_dim(4, d, Variant::Fn).unwrap();
            assert_eq!(nak, fnd, "BS_4 degree {d}");
        }
    }

    #[test]
    fn hopf_monomial_counts_match_nakaoka() {
        for n in [2usize, 4, 6] {
            for d in 0..=7u32 {
                assert_eq!(
                    enumerate_monomials(n, d).len(),
                    nakaoka_basis(n, d).len(),
                    "count at ({n},{d})"
                );
            }
        }
    }

    #[test]
    fn generator_relation_binomial() {
        let g = SymClass::generator(1, 1);
        assert!(odot(&g, &g).is_zero());
        let g12 = SymClass::generator(1, 2);
        assert_eq!(odot(&g, &g12), SymClass::generator(1, 3));
        // units: 1_1 ⊙ 1_1 = binom(2,1) 1_2 = 0
        let u = SymClass::from_monomial(SymMonomial::one(2));
        assert!(odot(&u, &u).is_zero());
    }

    #[test]
    fn cup_across_components_is_zero() {
        let a = SymClass::generator(1, 1);
        let b = SymClass::generator(1, 2);
        assert!(cup(&a, &b).is_zero());
    }

    #[test]
    fn euler_multiplication_rule() {
        // e * (γ_{1,2} ⊙ 1_1) on 6 points follows the replacement rule.
        let n = 6;
        let e = euler_class(n);
        let x = SymClass::from_monomial(
            SymMonomial::from_cols(vec![SymColumn::generator(1, 2)], 2).unwrap(),
        );
        let r = cup(&e, &x);
        let c11sq = SymColumn { width: 2, exps: BTreeMap::from([(1, 2)]) };
        let mut expected = SymClass::zero();
        expected.toggle(
            SymMonomial::from_cols(vec![c11sq, SymColumn::generator(1, 1)], 2).unwrap(),
        );
        expected.toggle(
            SymMonomial::from_cols(
                vec![SymColumn::generator(1, 2), SymColumn::generator(1, 1)],
                0,
            )
            .unwrap(),
        );
        assert_eq!(r, expected);
    }

    #[test]
    fn coproduct_of_generator() {
        let g = SymClass::generator(1, 2);
        let cp = coproduct_sym(&g, 2, 2);
        assert_eq!(cp.len(), 1);
        let (l, r) = cp.into_iter().next().unwrap();
        assert_eq!(l, SymMonomial::from_cols(vec![SymColumn::generator(1, 1)], 0).unwrap());
        assert_eq!(l, r);
        let u = SymClass::from_monomial(SymMonomial::one(4));
        assert_eq!(coproduct_sym(&u, 2, 2).len(), 1);
    }

    #[test]
    fn gysin_bases_counts() {
        for d in 0..=10u32 {
            assert!(gysin_a(6, d).is_empty(), "G_a(6,{d})");
        }
        let ga = gysin_a(4, 3);
        assert_eq!(ga.len(), 1);
        assert_eq!(ga[0].cols[0], SymColumn::generator(2, 1));
        for n in [4usize, 6, 8] {
            for d in 0..=6u32 {
                for m in gysin_a(n, d) {
                    assert!(in_gysin_q(&m));
                }
            }
        }
    }

    #[test]
    fn gysin_short_exact_counts_small() {
        for n in [4usize, 6] {
            for d in 0..=6u32 {
                let lhs = cohomology_dim(n, d, Variant::Fna).unwrap();
                let rhs = gysin_q(n, d).len() + gysin_a(n, d).len();
                assert_eq!(lhs, rhs, "Gysin count at ({n},{d})");
            }
        }
    }

    #[test]
    fn annihilator_rank_checks() {
        let n = 4;
        for d in 0..=6u32 {
            let e = euler_class(n);
            for m in gysin_a(n, d) {
                let prod = cup(&e, &SymClass::from_monomial(m.clone()));
                assert!(prod.is_zero(), "e * {m} != 0");
            }
            let all = enumerate_monomials(n, d);
            let mut image: Vec<SymClass> = Vec::new();
            for m in &all {
                let p = cup(&e, &SymClass::from_monomial(m.clone()));
                if !p.is_zero() {
                    image.push(p);
                }
            }
            let basis_next = enumerate_monomials(n, d + 1);
            let index: HashMap<&SymMonomial, usize> =
                basis_next.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let to_vec = |x: &SymClass| {
                let mut v = crate::f2::BitVec::zeros(basis_next.len());
                for t in &x.terms {
                    v.flip(index[t]);
                }
                v
            };
            let mut rows: Vec<crate::f2::BitVec> = image.iter().map(&to_vec).collect();
            let image_rank = if rows.is_empty() {
                0
            } else {
                crate::f2::BitMatrix::from_rows(&rows).rank()
            };
            let q_next = gysin_q(n, d + 1);
            for m in &q_next {
                rows.push(to_vec(&SymClass::from_monomial(m.clone())));
            }
            let full = crate::f2::BitMatrix::from_rows(&rows).rank();
            assert_eq!(full, image_rank + q_next.len(), "G_q dependent mod (e) at {}", d + 1);
        }
    }

    #[test]
    fn symmetric_function_conversion() {
        let r = m_in_e_basis(&vec![1, 1], 3);
        assert_eq!(r, BTreeSet::from([vec![0, 1, 0]]));
        let r = m_in_e_basis(&vec![2], 2);
        assert_eq!(r, BTreeSet::from([vec![2, 0]]));
        for (lam, n) in [(vec![2, 1], 3usize), (vec![3, 1], 4), (vec![2, 2], 4)] {
            let e = m_in_e_basis(&lam, n);
            let mut p: Poly = BTreeSet::new();
            for c in &e {
                for t in e_mono_poly(c, n) {
                    if !p.remove(&t) {
                        p.insert(t.clone());
                    }
                }
            }
            assert_eq!(p, m_poly(&lam, n), "round trip {lam:?}");
        }
    }

    #[test]
    fn odot_associative_commutative() {
        let a = SymClass::generator(2, 1);
        let b = SymClass::generator(2, 2);
        let c = SymClass::generator(1, 1);
        let ab = odot(&a, &b);
        assert_eq!(odot(&ab, &c), odot(&a, &odot(&b, &c)));
        assert_eq!(odot(&a, &b), odot(&b, &a));
        assert_eq!(ab, SymClass::generator(2, 3));
    }

    #[test]
    fn cup_bialgebra_sample() {
        let x = SymClass::generator(1, 2);
        let y = SymClass::generator(2, 1);
        let xy = cup(&x, &y);
        let d_xy = coproduct_sym(&xy, 2, 2);
        let dx = coproduct_sym(&x, 2, 2);
        let dy = coproduct_sym(&y, 2, 2);
        let mut rhs: BTreeSet<(SymMonomial, SymMonomial)> = BTreeSet::new();
        for (xl, xr) in &dx {
            for (yl, yr) in &dy {
                let l = cup_mono(xl, yl);
                let r = cup_mono(xr, yr);
                for lt in &l.terms {
                    for rt in &r.terms {
                        let pair = (lt.clone(), rt.clone());
                        if !rhs.remove(&pair) {
                            rhs.insert(pair);
                        }
                    }
                }
            }
        }
        assert_eq!(d_xy, rhs);
    }

    #[test]
    fn cup_associative_commutative_samples() {
        // on BS_4 through degree 6: products of basis monomials
        let mons = enumerate_monomials(4, 2);
        for a in &mons {
            for b in &mons {
                let ab = cup_mono(a, b);
                let ba = cup_mono(b, a);
                assert_eq!(ab, ba, "commutativity {a} {b}");
            }
        }
        let x = SymClass::generator(1, 2);
        let y = SymClass::generator(2, 1);
        let z = SymClass::generator(1, 2);
        assert_eq!(cup(&cup(&x, &y), &z), cup(&x, &cup(&y, &z)));
    }
}
