//! Finite bounded lattices with an optional complement map, and exhaustive
//! checks of the proposition-system axioms.
//!
//! Axioms, in the order they are checked:
//!
//! * I — partial order (reflexive, antisymmetric, transitive);
//! * II — bounded lattice (unique meets and joins);
//! * III — orthocomplement (involutive, `a ∧ ¬a = 0`, `a ∨ ¬a = 1`, order
//!   reversing);
//! * IV — orthomodular law `a ≤ b ⟹ b = a ∨ (b ∧ ¬a)`;
//! * V — atomistic with the covering property.
//!
//! Everything is a loop over all pairs or triples; the order is stored as a
//! dense `size × size` boolean matrix.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{AxiomReport, CheckResult};

/// Largest size accepted by [`find_nonreversing_complement`].
pub const MAX_ENUMERATION_SIZE: usize = 8;
/// Largest size for the alternative-complement search.
pub const MAX_COMPLEMENT_SEARCH: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteOrtholattice {
    labels: Vec<String>,
    leq: Vec<bool>,
    complement: Option<Vec<usize>>,
    bottom: usize,
    top: usize,
}

/// On-disk form. `leq` lists pairs `[i, j]` meaning `i ≤ j`; the
/// reflexive-transitive closure is applied on load.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub size: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    pub leq: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement: Option<Vec<usize>>,
    pub bottom: usize,
    pub top: usize,
}

fn check_index(size: usize, i: usize, what: &str) -> Result<()> {
    if i >= size {
        return Err(Error::InvalidLattice(format!("{what} {i} out of range for size {size}")));
    }
    Ok(())
}

impl FiniteOrtholattice {
    /// Builds from a full order matrix; the order axioms are not enforced
    /// (see [`verify_poset`]).
    pub fn new(
        labels: Vec<String>,
        leq: Vec<Vec<bool>>,
        complement: Option<Vec<usize>>,
        bottom: usize,
        top: usize,
    ) -> Result<Self> {
        let size = labels.len();
        if size == 0 {
            return Err(Error::InvalidLattice("a lattice needs at least one element".into()));
        }
        if leq.len() != size || leq.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidLattice(format!("order matrix must be {size}x{size}")));
        }
        check_index(size, bottom, "bottom")?;
        check_index(size, top, "top")?;
        if let Some(c) = &complement {
            if c.len() != size {
                return Err(Error::InvalidLattice(format!(
                    "complement has {} entries for size {size}",
                    c.len()
                )));
            }
            for &x in c {
                check_index(size, x, "complement value")?;
            }
        }
        Ok(Self {
            labels,
            leq: leq.into_iter().flatten().collect(),
            complement,
            bottom,
            top,
        })
    }

    /// Builds from generating pairs `i ≤ j`, closing reflexively and
    /// transitively.
    pub fn from_pairs(
        labels: Vec<String>,
        pairs: &[[usize; 2]],
        complement: Option<Vec<usize>>,
        bottom: usize,
        top: usize,
    ) -> Result<Self> {
        let n = labels.len();
        let mut m = vec![vec![false; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = true;
        }
        for &[i, j] in pairs {
            check_index(n, i, "order pair element")?;
            check_index(n, j, "order pair element")?;
            m[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if m[i][k] {
                    for j in 0..n {
                        if m[k][j] {
                            m[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::new(labels, m, complement, bottom, top)
    }

    pub fn from_file(f: LatticeFile) -> Result<Self> {
        let labels = if f.labels.is_empty() {
            (0..f.size).map(|i| i.to_string()).collect()
        } else if f.labels.len() == f.size {
            f.labels
        } else {
            return Err(Error::InvalidLattice(format!(
                "{} labels for size {}",
                f.labels.len(),
                f.size
            )));
        };
        Self::from_pairs(labels, &f.leq, f.complement, f.bottom, f.top)
    }

    /// File form listing every strict pair of the order.
    pub fn to_file(&self) -> LatticeFile {
        let n = self.size();
        let mut leq = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq(i, j) {
                    leq.push([i, j]);
                }
            }
        }
        LatticeFile {
            size: n,
            labels: self.labels.clone(),
            leq,
            complement: self.complement.clone(),
            bottom: self.bottom,
            top: self.top,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_file(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("lattice serializes")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size() + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn complement(&self) -> Option<&[usize]> {
        self.complement.as_deref()
    }

    pub fn neg(&self, a: usize) -> Option<usize> {
        self.complement.as_ref().map(|c| c[a])
    }

    /// The same order with another complement map.
    pub fn with_complement(&self, complement: Option<Vec<usize>>) -> Result<Self> {
        let n = self.size();
        let leq = (0..n).map(|i| (0..n).map(|j| self.leq(i, j)).collect()).collect();
        Self::new(self.labels.clone(), leq, complement, self.bottom, self.top)
    }

    fn bound(&self, a: usize, b: usize, upper: bool) -> Result<usize> {
        let n = self.size();
        let rel = |x: usize, y: usize| if upper { self.leq(y, x) } else { self.leq(x, y) };
        let bounds: Vec<usize> = (0..n).filter(|&c| rel(c, a) && rel(c, b)).collect();
        let best: Vec<usize> = bounds
            .iter()
            .copied()
            .filter(|&g| bounds.iter().all(|&c| rel(c, g)))
            .collect();
        match best.as_slice() {
            [g] => Ok(*g),
            _ => Err(Error::NotALattice(a, b, if upper { "join" } else { "meet" })),
        }
    }

    /// Greatest lower bound.
    pub fn meet(&self, a: usize, b: usize) -> Result<usize> {
        self.bound(a, b, false)
    }

    /// Least upper bound.
    pub fn join(&self, a: usize, b: usize) -> Result<usize> {
        self.bound(a, b, true)
    }

    /// All meets and joins, or the first pair without one.
    pub fn tables(&self) -> Result<Tables> {
        let n = self.size();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let m = self.meet(a, b)?;
                let j = self.join(a, b)?;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }
        Ok(Tables { n, meet, join })
    }

    /// Hasse diagram in Graphviz DOT, edges pointing upwards.
    pub fn to_dot(&self) -> String {
        let n = self.size();
        let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", l.replace('"', "\\\""));
        }
        for (a, b) in self.covers() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        if let Some(c) = &self.complement {
            for (a, &b) in c.iter().enumerate().take(n) {
                if a < b {
                    let _ = writeln!(out, "  n{a} -> n{b} [style=dashed, dir=both, constraint=false];");
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// Covering pairs `a ⋖ b`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }
}

/// Precomputed meet and join tables.
#[derive(Debug, Clone)]
pub struct Tables {
    n: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
}

impl Tables {
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }
}

/// Axiom I.
pub fn verify_poset(l: &FiniteOrtholattice) -> AxiomReport {
    let n = l.size();
    let mut r = AxiomReport::default();
    let refl = (0..n).find(|&a| !l.leq(a, a)).map(|a| vec![a]);
    r.push(CheckResult::exact("reflexive", refl));
    let mut anti = None;
    'outer: for a in 0..n {
        for b in 0..n {
            if a != b && l.leq(a, b) && l.leq(b, a) {
                anti = Some(vec![a, b]);
                break 'outer;
            }
        }
    }
    r.push(CheckResult::exact("antisymmetric", anti));
    let mut trans = None;
    'outer: for a in 0..n {
        for b in 0..n {
            if !l.leq(a, b) {
                continue;
            }
            for c in 0..n {
                if l.leq(b, c) && !l.leq(a, c) {
                    trans = Some(vec![a, b, c]);
                    break 'outer;
                }
            }
        }
    }
    r.push(CheckResult::exact("transitive", trans));
    r
}

/// Axiom II: bounds and unique meets and joins.
pub fn verify_lattice(l: &FiniteOrtholattice) -> AxiomReport {
    let n = l.size();
    let mut r = AxiomReport::default();
    let bad = (0..n)
        .find(|&a| !l.leq(l.bottom, a) || !l.leq(a, l.top))
        .map(|a| vec![a]);
    r.push(CheckResult::exact("bounded", bad));
    for (name, upper) in [("meets", false), ("joins", true)] {
        let mut w = None;
        'outer: for a in 0..n {
            for b in a..n {
                if l.bound(a, b, upper).is_err() {
                    w = Some(vec![a, b]);
                    break 'outer;
                }
            }
        }
        r.push(CheckResult::exact(name, w));
    }
    r
}

fn first_pair(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<Vec<usize>> {
    for a in 0..n {
        for b in 0..n {
            if bad(a, b) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

/// Axiom III. Each clause is a separate check so that a failure of order
/// reversal alone is visible.
pub fn verify_orthocomplement(l: &FiniteOrtholattice) -> AxiomReport {
    let mut r = AxiomReport::default();
    let Some(c) = l.complement() else {
        r.push(CheckResult::exact("complement_present", Some(vec![])));
        return r;
    };
    let n = l.size();
    let inv = (0..n).find(|&a| c[c[a]] != a).map(|a| vec![a]);
    r.push(CheckResult::exact("involutive", inv));
    let tables = match l.tables() {
        Ok(t) => t,
        Err(Error::NotALattice(a, b, _)) => {
            r.push(CheckResult::exact("lattice", Some(vec![a, b])));
            return r;
        }
        Err(_) => unreachable!("tables only fail with NotALattice"),
    };
    let meet_law = (0..n).find(|&a| tables.meet(a, c[a]) != l.bottom).map(|a| vec![a]);
    r.push(CheckResult::exact("complement_meet", meet_law));
    let join_law = (0..n).find(|&a| tables.join(a, c[a]) != l.top).map(|a| vec![a]);
    r.push(CheckResult::exact("complement_join", join_law));
    let rev = first_pair(n, |a, b| l.leq(a, b) != l.leq(c[b], c[a]));
    r.push(CheckResult::exact("order_reversing", rev));
    r
}

/// `¬(a ∨ b) = ¬a ∧ ¬b` for all pairs.
pub fn verify_de_morgan(l: &FiniteOrtholattice) -> Result<CheckResult> {
    let c = l
        .complement()
        .ok_or_else(|| Error::InvalidLattice("no complement".into()))?;
    let t = l.tables()?;
    let w = first_pair(l.size(), |a, b| c[t.join(a, b)] != t.meet(c[a], c[b]));
    Ok(CheckResult::exact("de_morgan", w))
}

/// Axiom IV, exhaustively over comparable pairs.
pub fn verify_orthomodular(l: &FiniteOrtholattice) -> AxiomReport {
    let mut r = AxiomReport::default();
    let (Some(c), Ok(t)) = (l.complement(), l.tables()) else {
        r.push(CheckResult::exact("orthomodular", Some(vec![])));
        return r;
    };
    let w = first_pair(l.size(), |a, b| l.leq(a, b) && t.join(a, t.meet(b, c[a])) != b);
    r.push(CheckResult::exact("orthomodular", w));
    r
}

fn is_orthocomplement(l: &FiniteOrtholattice, t: &Tables, c: &[usize]) -> bool {
    let n = l.size();
    (0..n).all(|a| c[c[a]] == a && t.meet(a, c[a]) == l.bottom && t.join(a, c[a]) == l.top)
        && first_pair(n, |a, b| l.leq(a, b) != l.leq(c[b], c[a])).is_none()
}

fn is_orthomodular_with(l: &FiniteOrtholattice, t: &Tables, c: &[usize]) -> bool {
    first_pair(l.size(), |a, b| l.leq(a, b) && t.join(a, t.meet(b, c[a])) != b).is_none()
}

/// Calls `f` on every involution of `0..n` in canonical order (smallest
/// unassigned element first: fixed, then paired with each larger element)
/// until it returns `true`.
fn for_each_involution(n: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(map: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = map.len();
        let Some(i) = map.iter().position(|&x| x == usize::MAX) else {
            return f(map);
        };
        map[i] = i;
        if rec(map, f) {
            return true;
        }
        for j in i + 1..n {
            if map[j] == usize::MAX {
                map[i] = j;
                map[j] = i;
                if rec(map, f) {
                    return true;
                }
                map[j] = usize::MAX;
            }
        }
        map[i] = usize::MAX;
        false
    }
    rec(&mut vec![usize::MAX; n], f)
}

/// A second orthomodular orthocomplementation of the same order, if any.
pub fn find_alternative_orthocomplement(l: &FiniteOrtholattice) -> Result<Option<Vec<usize>>> {
    if l.size() > MAX_COMPLEMENT_SEARCH {
        return Err(Error::InvalidArgument(format!(
            "complement search is limited to {MAX_COMPLEMENT_SEARCH} elements"
        )));
    }
    let t = l.tables()?;
    let current = l.complement().map(<[usize]>::to_vec);
    let mut found = None;
    for_each_involution(l.size(), &mut |c| {
        if Some(c) != current.as_deref() && is_orthocomplement(l, &t, c) && is_orthomodular_with(l, &t, c) {
            found = Some(c.to_vec());
            true
        } else {
            false
        }
    });
    Ok(found)
}

/// Elements covering the bottom.
pub fn atoms(l: &FiniteOrtholattice) -> Vec<usize> {
    let b = l.bottom;
    l.covers().into_iter().filter(|&(x, _)| x == b).map(|(_, y)| y).collect()
}

/// Every element is the join of the atoms below it.
pub fn verify_atomistic(l: &FiniteOrtholattice) -> AxiomReport {
    let mut r = AxiomReport::default();
    let t = match l.tables() {
        Ok(t) => t,
        Err(Error::NotALattice(a, b, _)) => {
            r.push(CheckResult::exact("atomistic", Some(vec![a, b])));
            return r;
        }
        Err(_) => unreachable!(),
    };
    let at = atoms(l);
    let w = (0..l.size())
        .find(|&x| {
            let j = at
                .iter()
                .filter(|&&p| l.leq(p, x))
                .fold(l.bottom, |acc, &p| t.join(acc, p));
            j != x
        })
        .map(|x| vec![x]);
    r.push(CheckResult::exact("atomistic", w));
    r
}

/// For every atom `p` and `b` with `p ∧ b = 0`, `b ∨ p` covers `b`.
pub fn verify_covering(l: &FiniteOrtholattice) -> AxiomReport {
    let mut r = AxiomReport::default();
    let t = match l.tables() {
        Ok(t) => t,
        Err(Error::NotALattice(a, b, _)) => {
            r.push(CheckResult::exact("covering", Some(vec![a, b])));
            return r;
        }
        Err(_) => unreachable!(),
    };
    let n = l.size();
    let mut w = None;
    'outer: for p in atoms(l) {
        for b in 0..n {
            if t.meet(p, b) != l.bottom {
                continue;
            }
            let j = t.join(b, p);
            if !l.lt(b, j) || (0..n).any(|c| l.lt(b, c) && l.lt(c, j)) {
                w = Some(vec![p, b]);
                break 'outer;
            }
        }
    }
    r.push(CheckResult::exact("covering", w));
    r
}

/// `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` for all triples.
pub fn is_distributive(l: &FiniteOrtholattice) -> Result<CheckResult> {
    let t = l.tables()?;
    let n = l.size();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t.meet(a, t.join(b, c)) != t.join(t.meet(a, b), t.meet(a, c)) {
                    return Ok(CheckResult::exact("distributive", Some(vec![a, b, c])));
                }
            }
        }
    }
    Ok(CheckResult::exact("distributive", None))
}

/// Axioms I–V in one report. Later groups are skipped when the order or
/// lattice structure is broken.
pub fn verify_axioms(l: &FiniteOrtholattice) -> AxiomReport {
    let mut r = verify_poset(l);
    if !r.passed() {
        return r;
    }
    r.extend(verify_lattice(l));
    if !r.passed() {
        return r;
    }
    r.extend(verify_orthocomplement(l));
    r.extend(verify_orthomodular(l));
    r.extend(verify_atomistic(l));
    r.extend(verify_covering(l));
    r
}

/// Output of [`soler_family`].
#[derive(Debug, Clone, PartialEq)]
pub struct SolerFamily {
    pub elements: Vec<usize>,
    /// Positions whose element is the bottom.
    pub zeros: Vec<usize>,
    /// Smallest-index atom below each nonzero element.
    pub atoms: Vec<Option<usize>>,
    /// `b_α ≤ ¬b_β` for all `α ≠ β`; witness holds positions.
    pub orthogonal: CheckResult,
}

/// `b_α = a_α ∧ ⋀_{β≠α} ¬a_β`.
pub fn soler_family(l: &FiniteOrtholattice, generators: &[usize]) -> Result<SolerFamily> {
    let c = l
        .complement()
        .ok_or_else(|| Error::InvalidLattice("soler family needs a complement".into()))?;
    for (i, &g) in generators.iter().enumerate() {
        check_index(l.size(), g, "generator")?;
        if generators[..i].contains(&g) {
            return Err(Error::InvalidArgument(format!("generator {g} repeated")));
        }
    }
    let t = l.tables()?;
    let elements: Vec<usize> = generators
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            generators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(a, |acc, (_, &b)| t.meet(acc, c[b]))
        })
        .collect();
    let zeros = (0..elements.len()).filter(|&i| elements[i] == l.bottom).collect();
    let at = atoms(l);
    let atoms = elements
        .iter()
        .map(|&b| (b != l.bottom).then(|| at.iter().copied().find(|&p| l.leq(p, b))).flatten())
        .collect();
    let k = elements.len();
    let w = first_pair(k, |i, j| i != j && !l.leq(elements[i], c[elements[j]]));
    Ok(SolerFamily {
        elements,
        zeros,
        atoms,
        orthogonal: CheckResult::exact("pairwise_orthogonal", w),
    })
}

/// A lattice with a complement that is involutive and satisfies
/// `a ∧ ¬a = 0` but is not order reversing at `pair`.
#[derive(Debug, Clone, PartialEq)]
pub struct NonreversingWitness {
    pub lattice: FiniteOrtholattice,
    pub pair: (usize, usize),
}

fn generic_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            _ if i == n - 1 => "1".to_string(),
            _ => ((b'a' + (i - 1) as u8) as char).to_string(),
        })
        .collect()
}

/// Exhaustive search over naturally labelled bounded lattices of size
/// `1..=max_size` and all involutions with `a ∧ ¬a = 0`, returning the first
/// whose map is not order reversing.
pub fn find_nonreversing_complement(max_size: usize) -> Result<Option<NonreversingWitness>> {
    if max_size > MAX_ENUMERATION_SIZE {
        return Err(Error::InvalidArgument(format!(
            "enumeration is limited to {MAX_ENUMERATION_SIZE} elements"
        )));
    }
    for n in 1..=max_size {
        if let Some(w) = search_size(n) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn search_size(n: usize) -> Option<NonreversingWitness> {
    let top = n - 1;
    // order among the middle elements, i < j only (natural labelling)
    let pairs: Vec<(usize, usize)> = (1..top)
        .flat_map(|i| (i + 1..top).map(move |j| (i, j)))
        .collect();
    for mask in 0u64..(1 << pairs.len()) {
        let mut m = vec![vec![false; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = true;
            row[top] = true;
        }
        m[0].iter_mut().for_each(|x| *x = true);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                m[i][j] = true;
            }
        }
        // skip non-closed masks: each order is visited once
        let closed = (0..n).all(|a| {
            (0..n).all(|b| !m[a][b] || (0..n).all(|c| !m[b][c] || m[a][c]))
        });
        if !closed {
            continue;
        }
        let l = FiniteOrtholattice::new(generic_labels(n), m, None, 0, top).expect("shape");
        let Ok(t) = l.tables() else { continue };
        let mut found = None;
        for_each_involution(n, &mut |c| {
            if (0..n).any(|a| t.meet(a, c[a]) != 0) {
                return false;
            }
            if let Some(w) = first_pair(n, |a, b| l.leq(a, b) != l.leq(c[b], c[a])) {
                found = Some((c.to_vec(), (w[0], w[1])));
                return true;
            }
            false
        });
        if let Some((c, pair)) = found {
            let lattice = l.with_complement(Some(c)).expect("valid map");
            return Some(NonreversingWitness { lattice, pair });
        }
    }
    None
}

fn set_label(bits: usize, n: usize) -> String {
    if bits == 0 {
        return "∅".into();
    }
    let items: Vec<String> = (0..n).filter(|i| bits >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Subsets of an `n`-set under inclusion with set complement.
pub fn boolean_lattice(n: usize) -> Result<FiniteOrtholattice> {
    if n > 7 {
        return Err(Error::InvalidArgument("boolean lattices are limited to n ≤ 7".into()));
    }
    let size = 1 << n;
    let labels = (0..size).map(|b| set_label(b, n)).collect();
    let leq = (0..size).map(|a| (0..size).map(|b| a & b == a).collect()).collect();
    let comp = (0..size).map(|a| (size - 1) ^ a).collect();
    FiniteOrtholattice::new(labels, leq, Some(comp), 0, size - 1)
}

fn labelled(labels: &[&str], pairs: &[[usize; 2]], comp: Option<Vec<usize>>) -> FiniteOrtholattice {
    let n = labels.len();
    FiniteOrtholattice::from_pairs(labels.iter().map(|s| s.to_string()).collect(), pairs, comp, 0, n - 1)
        .expect("valid fixture")
}

/// Benzene ring `0 < a < b < 1`, `0 < ¬b < ¬a < 1`.
pub fn o6() -> FiniteOrtholattice {
    labelled(
        &["0", "a", "b", "b'", "a'", "1"],
        &[[0, 1], [1, 2], [2, 5], [0, 3], [3, 4], [4, 5]],
        Some(vec![5, 4, 3, 2, 1, 0]),
    )
}

/// Four pairwise incomparable atoms `p, p', q, q'` between 0 and 1.
pub fn mo2() -> FiniteOrtholattice {
    labelled(
        &["0", "p", "p'", "q", "q'", "1"],
        &[[0, 1], [0, 2], [0, 3], [0, 4], [1, 5], [2, 5], [3, 5], [4, 5]],
        Some(vec![5, 2, 1, 4, 3, 0]),
    )
}

/// Diamond with three atoms; no complement.
pub fn diamond_m3() -> FiniteOrtholattice {
    labelled(
        &["0", "x", "y", "z", "1"],
        &[[0, 1], [0, 2], [0, 3], [1, 4], [2, 4], [3, 4]],
        None,
    )
}

/// Chain `0 < 1 < … < n−1`; no complement.
pub fn chain(n: usize) -> Result<FiniteOrtholattice> {
    if n == 0 {
        return Err(Error::InvalidArgument("chain needs at least one element".into()));
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    let leq = (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect();
    FiniteOrtholattice::new(labels, leq, None, 0, n - 1)
}
