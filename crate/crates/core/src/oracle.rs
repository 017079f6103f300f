//! Brute-force enumeration of lattice paths and of non-intersecting path
//! families. This is the ground truth every other route is checked against,
//! so it deliberately shares nothing with the determinant code beyond the
//! weight of a single step.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{BigRational, LaurentPoly};
use crate::paths::{region_end, region_start, step_label, LatticePoint, PathSpec};
use crate::qseries::weight;

/// Default bound on the number of search states visited by the enumerators.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Strictly increasing sequence of dent coordinates `a_1 < ... < a_m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DentSequence(Vec<i64>);

impl DentSequence {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidRegion(format!("dents {values:?} are not strictly increasing")));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn need(&self, n: usize) -> Result<()> {
        if self.0.len() < n {
            Err(Error::SequenceTooShort { need: n, got: self.0.len() })
        } else {
            Ok(())
        }
    }

    /// `(a_2, ..., a_m)`.
    pub fn drop_first(&self) -> Result<Self> {
        self.need(2)?;
        Ok(Self(self.0[1..].to_vec()))
    }

    /// `(a_1, ..., a_{m-1})`.
    pub fn drop_last(&self) -> Result<Self> {
        self.need(2)?;
        Ok(Self(self.0[..self.0.len() - 1].to_vec()))
    }

    /// `(a_2, ..., a_{m-1})`.
    pub fn drop_both(&self) -> Result<Self> {
        self.need(2)?;
        Ok(Self(self.0[1..self.0.len() - 1].to_vec()))
    }

    /// Every entry shifted by `delta`.
    pub fn shifted(&self, delta: i64) -> Self {
        Self(self.0.iter().map(|a| a + delta).collect())
    }
}

impl fmt::Debug for DentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A quartered hexagon with dents: `m` paths, height parameter `k`, and the
/// terminal heights of the paths.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegionSpec {
    m: usize,
    k: usize,
    dents: DentSequence,
}

impl RegionSpec {
    /// Requires `m >= 1`, exactly `m` dents, strictly increasing. Dents
    /// outside the physical window are accepted; see [`RegionSpec::is_admissible`].
    pub fn new(m: usize, k: usize, dents: Vec<i64>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidRegion("a region needs at least one path".into()));
        }
        if dents.len() != m {
            return Err(Error::InvalidRegion(format!("expected {m} dents, got {}", dents.len())));
        }
        Ok(Self { m, k, dents: DentSequence::new(dents)? })
    }

    /// Like [`RegionSpec::new`] but also enforces the dent window.
    pub fn admissible(m: usize, k: usize, dents: Vec<i64>) -> Result<Self> {
        let r = Self::new(m, k, dents)?;
        if !r.is_admissible() {
            return Err(Error::InvalidRegion(format!(
                "dents {:?} leave the window [{}, {}]",
                r.dents,
                r.dent_min(),
                r.m as i64 - 1
            )));
        }
        Ok(r)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dents(&self) -> &DentSequence {
        &self.dents
    }

    /// Lowest dent coordinate of the physical window, `-(m + k - 1)`.
    pub fn dent_min(&self) -> i64 {
        -((self.m + self.k) as i64 - 1)
    }

    /// `-(m+k-1) <= a_1` and `a_m <= m-1`.
    pub fn is_admissible(&self) -> bool {
        let v = self.dents.values();
        v[0] >= self.dent_min() && v[self.m - 1] < self.m as i64
    }

    /// The last path can reach its end only if `a_m <= m - 1`.
    pub fn last_path_feasible(&self) -> bool {
        self.dents.values()[self.m - 1] < self.m as i64
    }

    pub fn start(&self, i: usize) -> LatticePoint {
        region_start(i as i64 + 1)
    }

    pub fn end(&self, i: usize) -> LatticePoint {
        region_end(self.m as i64, self.k as i64, self.dents.values()[i])
    }

    /// Every admissible region with the given `m` and `k`, in lexicographic
    /// order of dents.
    pub fn all_admissible(m: usize, k: usize) -> Vec<RegionSpec> {
        let lo = -((m + k) as i64 - 1);
        let hi = m as i64 - 1;
        increasing_sequences(lo, hi, m).into_iter().map(|d| RegionSpec { m, k, dents: DentSequence(d) }).collect()
    }
}

/// All strictly increasing sequences of length `len` with entries in `[lo, hi]`.
pub fn increasing_sequences(lo: i64, hi: i64, len: usize) -> Vec<Vec<i64>> {
    fn go(next: i64, hi: i64, len: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let remaining = (len - cur.len()) as i64;
        for v in next..=hi - remaining + 1 {
            cur.push(v);
            go(v + 1, hi, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lo, hi, len, &mut Vec::new(), &mut out);
    out
}

/// A monotone path given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    vertices: Vec<LatticePoint>,
}

impl LatticePath {
    /// Checks that consecutive vertices differ by a right or a down unit step.
    pub fn new(vertices: Vec<LatticePoint>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Precondition("a path has at least one vertex".into()));
        }
        for w in vertices.windows(2) {
            let right = w[1].a == w[0].a + 1 && w[1].b == w[0].b;
            let down = w[1].a == w[0].a && w[1].b == w[0].b - 1;
            if !right && !down {
                return Err(Error::Precondition(format!("illegal step {:?} -> {:?}", w[0], w[1])));
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn start(&self) -> LatticePoint {
        self.vertices[0]
    }

    pub fn end(&self) -> LatticePoint {
        *self.vertices.last().unwrap()
    }

    /// Left endpoints of the horizontal steps.
    pub fn right_steps(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        self.vertices.windows(2).filter(|w| w[1].a == w[0].a + 1).map(|w| w[0])
    }

    /// Labels of the horizontal steps, in path order.
    pub fn labels(&self) -> Vec<i64> {
        self.right_steps().map(step_label).collect()
    }

    pub fn weight(&self) -> LaurentPoly {
        self.right_steps().fold(LaurentPoly::one(), |acc, p| &acc * &weight(step_label(p)))
    }
}

/// One path per dent, path `i` running from `(2i-1, i-1)` to `(2m-1+k, a_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    paths: Vec<LatticePath>,
}

impl PathFamily {
    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    /// Sorted multiset of all horizontal-step labels.
    pub fn label_multiset(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.paths.iter().flat_map(|p| p.labels()).collect();
        v.sort_unstable();
        v
    }

    pub fn weight(&self) -> LaurentPoly {
        self.paths.iter().fold(LaurentPoly::one(), |acc, p| &acc * &p.weight())
    }

    pub fn is_vertex_disjoint(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.paths.iter().flat_map(|p| p.vertices.iter()).all(|v| seen.insert(*v))
    }

    /// Whether this is a valid family for `region`: right endpoints, legal
    /// steps and pairwise vertex-disjoint paths.
    pub fn is_valid_for(&self, region: &RegionSpec) -> bool {
        self.paths.len() == region.m()
            && self.paths.iter().enumerate().all(|(i, p)| p.start() == region.start(i) && p.end() == region.end(i))
            && self.is_vertex_disjoint()
    }
}

fn binomial_saturating(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(u128::from(n - i)) / u128::from(i + 1);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}

/// Every monotone path for `spec`, with its weight. Fails up front if the
/// number of paths, a binomial coefficient, exceeds `cap`.
pub fn enumerate_single(spec: &PathSpec, cap: u64) -> Result<Vec<(LatticePath, LaurentPoly)>> {
    if !spec.is_feasible() {
        return Ok(Vec::new());
    }
    let (r, d) = (spec.right_steps() as u64, spec.down_steps() as u64);
    if binomial_saturating(r + d, r) > u128::from(cap) {
        return Err(Error::CapExceeded { cap });
    }
    fn go(p: LatticePoint, end: LatticePoint, cur: &mut Vec<LatticePoint>, out: &mut Vec<(LatticePath, LaurentPoly)>) {
        cur.push(p);
        if p == end {
            let path = LatticePath { vertices: cur.clone() };
            let w = path.weight();
            out.push((path, w));
        } else {
            if p.a < end.a {
                go(LatticePoint::new(p.a + 1, p.b), end, cur, out);
            }
            if p.b > end.b {
                go(LatticePoint::new(p.a, p.b - 1), end, cur, out);
            }
        }
        cur.pop();
    }
    let mut out = Vec::new();
    go(spec.start, spec.end, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Depth-first search over vertex-disjoint families. Paths are routed in
/// order; a path never steps onto a vertex held by an earlier path.
struct FamilySearch<'r> {
    region: &'r RegionSpec,
    x_min: i64,
    y_min: i64,
    width: usize,
    occupied: Vec<bool>,
    label_min: i64,
    label_counts: Vec<u16>,
    label_keys: Vec<u64>,
    hist_hash: u64,
    current: Vec<Vec<LatticePoint>>,
    visited: u64,
    cap: u64,
}

impl<'r> FamilySearch<'r> {
    fn new(region: &'r RegionSpec, cap: u64) -> Self {
        let m = region.m() as i64;
        let dents = region.dents().values();
        let x_min = 1;
        let x_max = 2 * m - 1 + region.k() as i64;
        let y_min = dents[0].min(0);
        let y_max = (m - 1).max(dents[dents.len() - 1]);
        let width = (x_max - x_min + 1) as usize;
        let height = (y_max - y_min + 1) as usize;
        let label_min = x_min - 2 * y_max;
        let label_max = x_max - 2 * y_min;
        Self {
            region,
            x_min,
            y_min,
            width,
            occupied: vec![false; width * height],
            label_min,
            label_counts: vec![0; (label_max - label_min + 1) as usize],
            label_keys: (label_min..=label_max).map(|l| splitmix64(l as u64)).collect(),
            hist_hash: 0,
            current: vec![Vec::new(); region.m()],
            visited: 0,
            cap,
        }
    }

    fn cell(&self, p: LatticePoint) -> usize {
        (p.b - self.y_min) as usize * self.width + (p.a - self.x_min) as usize
    }

    fn run(&mut self, visit: &mut dyn FnMut(&FamilySearch<'_>)) -> Result<()> {
        let region = self.region;
        let all_feasible = (0..region.m()).all(|i| {
            let (s, e) = (region.start(i), region.end(i));
            s.a <= e.a && s.b >= e.b
        });
        if !all_feasible {
            return Ok(());
        }
        self.route(0, region.start(0), visit)
    }

    fn route(&mut self, i: usize, p: LatticePoint, visit: &mut dyn FnMut(&FamilySearch<'_>)) -> Result<()> {
        self.visited += 1;
        if self.visited > self.cap {
            return Err(Error::CapExceeded { cap: self.cap });
        }
        let idx = self.cell(p);
        if self.occupied[idx] {
            return Ok(());
        }
        self.occupied[idx] = true;
        self.current[i].push(p);
        let end = self.region.end(i);
        let result = if p == end {
            if i + 1 == self.region.m() {
                visit(self);
                Ok(())
            } else {
                self.route(i + 1, self.region.start(i + 1), visit)
            }
        } else {
            self.step(i, p, end, visit)
        };
        self.current[i].pop();
        self.occupied[idx] = false;
        result
    }

    fn step(
        &mut self,
        i: usize,
        p: LatticePoint,
        end: LatticePoint,
        visit: &mut dyn FnMut(&FamilySearch<'_>),
    ) -> Result<()> {
        if p.a < end.a {
            let slot = (step_label(p) - self.label_min) as usize;
            self.label_counts[slot] += 1;
            self.hist_hash = self.hist_hash.wrapping_add(self.label_keys[slot]);
            let r = self.route(i, LatticePoint::new(p.a + 1, p.b), visit);
            self.hist_hash = self.hist_hash.wrapping_sub(self.label_keys[slot]);
            self.label_counts[slot] -= 1;
            r?;
        }
        if p.b > end.b {
            self.route(i, LatticePoint::new(p.a, p.b - 1), visit)?;
        }
        Ok(())
    }

    fn family(&self) -> PathFamily {
        PathFamily { paths: self.current.iter().map(|v| LatticePath { vertices: v.clone() }).collect() }
    }
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-label step counts of one family and the number of families sharing them.
type Histograms = Vec<(Vec<u16>, u64)>;

/// Label histograms of all families with their multiplicities. The running
/// hash only buckets histograms; equality is always checked on the full
/// histogram.
fn label_histograms(region: &RegionSpec, cap: u64) -> Result<(i64, Histograms)> {
    let mut search = FamilySearch::new(region, cap);
    let label_min = search.label_min;
    let mut buckets: HashMap<u64, Histograms> = HashMap::new();
    search.run(&mut |s| {
        let bucket = buckets.entry(s.hist_hash).or_default();
        match bucket.iter_mut().find(|(h, _)| *h == s.label_counts) {
            Some((_, n)) => *n += 1,
            None => bucket.push((s.label_counts.clone(), 1)),
        }
    })?;
    let mut hists: Vec<_> = buckets.into_values().flatten().collect();
    hists.sort_unstable();
    Ok((label_min, hists))
}

/// Sum over all non-intersecting families of the product of their step
/// weights.
///
/// Every family has the same number `N` of right steps, so the sum is
/// `2^-N` times a sum of products of `q^l + q^-l`, which is accumulated with
/// dense integer coefficients.
pub fn family_gf(region: &RegionSpec, cap: u64) -> Result<LaurentPoly> {
    let (label_min, hists) = label_histograms(region, cap)?;
    if hists.is_empty() {
        return Ok(LaurentPoly::zero());
    }
    // w_l = w_{-l}: fold each histogram into (|l|, count) pairs
    let mut folded: BTreeMap<Vec<(usize, usize)>, u64> = BTreeMap::new();
    let mut steps = 0usize;
    for (hist, mult) in &hists {
        let mut by_abs: BTreeMap<usize, usize> = BTreeMap::new();
        for (slot, &c) in hist.iter().enumerate().filter(|(_, &c)| c > 0) {
            *by_abs.entry((label_min + slot as i64).unsigned_abs() as usize).or_default() += usize::from(c);
        }
        steps = by_abs.values().sum();
        *folded.entry(by_abs.into_iter().collect()).or_default() += mult;
    }
    let max_abs = folded.keys().flat_map(|f| f.iter().map(|&(l, _)| l)).max().unwrap_or(0);
    let bound = steps * max_abs;
    let width = 2 * bound + 1;
    // partial[d] holds the product over the first d pairs; sorted keys share
    // prefixes, so only the tail is recomputed.
    let mut partial: Vec<Vec<u128>> = vec![vec![0u128; width]];
    let mut reach = vec![0usize];
    partial[0][bound] = 1;
    let mut prev: &[(usize, usize)] = &[];
    let mut total = vec![0u128; width];
    for (key, mult) in &folded {
        let from = prev.iter().zip(key).take_while(|(x, y)| x == y).count();
        partial.truncate(from + 1);
        reach.truncate(from + 1);
        for &(l, count) in &key[from..] {
            let src = partial.last().expect("nonempty");
            let r0 = *reach.last().expect("nonempty");
            let r1 = r0 + count * l;
            let mut dst = vec![0u128; width];
            // multiply by (q^l + q^-l)^count
            let mut binom = 1u128;
            for t in 0..=count {
                let shift = 2 * t * l;
                let lo = bound - r0;
                for e in lo..=bound + r0 {
                    dst[e + shift - count * l] += src[e] * binom;
                }
                binom = binom * (count - t) as u128 / (t + 1) as u128;
            }
            partial.push(dst);
            reach.push(r1);
        }
        let (cur, r) = (partial.last().expect("nonempty"), *reach.last().expect("nonempty"));
        let mult = u128::from(*mult);
        for e in bound - r..=bound + r {
            total[e] = total[e]
                .checked_add(cur[e].checked_mul(mult).ok_or(Error::CapExceeded { cap })?)
                .ok_or(Error::CapExceeded { cap })?;
        }
        prev = key;
    }
    let steps = steps as u32;
    let scale = BigRational::new(1.into(), num_bigint::BigInt::from(1u8) << steps);
    Ok(LaurentPoly::from_terms(
        total
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(e, &c)| (e as i64 - bound as i64, BigRational::from_integer(c.into()) * &scale)),
    ))
}

/// Distinct label multisets (sorted) with the number of families realising
/// each.
pub fn label_multisets(region: &RegionSpec, cap: u64) -> Result<Vec<(Vec<i64>, u64)>> {
    let (label_min, hists) = label_histograms(region, cap)?;
    Ok(hists
        .into_iter()
        .map(|(h, n)| {
            let labels = h
                .iter()
                .enumerate()
                .flat_map(|(slot, &c)| std::iter::repeat_n(label_min + slot as i64, c.into()))
                .collect();
            (labels, n)
        })
        .collect())
}

/// First family (in [`enumerate_families`] order) with the given multiset of
/// right-step labels.
pub fn family_with_labels(region: &RegionSpec, labels: &[i64], cap: u64) -> Result<Option<PathFamily>> {
    let mut search = FamilySearch::new(region, cap);
    let mut target = vec![0u16; search.label_counts.len()];
    for &l in labels {
        match usize::try_from(l - search.label_min).ok().filter(|&s| s < target.len()) {
            Some(slot) => target[slot] += 1,
            None => return Ok(None),
        }
    }
    let key = target.iter().zip(&search.label_keys).fold(0u64, |h, (&c, &k)| h.wrapping_add(k.wrapping_mul(c.into())));
    let mut found = None;
    search.run(&mut |s| {
        if found.is_none() && s.hist_hash == key && s.label_counts == target {
            found = Some(s.family());
        }
    })?;
    Ok(found)
}

/// Number of non-intersecting families; the value of [`family_gf`] at `q = 1`.
pub fn family_count(region: &RegionSpec, cap: u64) -> Result<u64> {
    let mut search = FamilySearch::new(region, cap);
    let mut n = 0u64;
    search.run(&mut |_| n += 1)?;
    Ok(n)
}

/// All families, in depth-first order (right steps explored before down steps).
pub fn enumerate_families(region: &RegionSpec, cap: u64) -> Result<Vec<PathFamily>> {
    let mut search = FamilySearch::new(region, cap);
    let mut out = Vec::new();
    search.run(&mut |s| out.push(s.family()))?;
    Ok(out)
}

/// The family at position `index` of [`enumerate_families`], without keeping
/// the others.
pub fn nth_family(region: &RegionSpec, index: u64, cap: u64) -> Result<Option<PathFamily>> {
    let mut search = FamilySearch::new(region, cap);
    let mut n = 0u64;
    let mut found = None;
    search.run(&mut |s| {
        if n == index {
            found = Some(s.family());
        }
        n += 1;
    })?;
    Ok(found)
}
