//! Splittings that fail to be cographic, and the search for minor-minimal matroids with one.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::hash::{Hash, Hasher};

use crate::bits::{self, Combinations, ElemSet};
use crate::cographic::{simple_cosimple_core, Culprit, ExcludedMinors, FMember};
use crate::error::{Error, Result};
use crate::iso::{self, IsoData};
use crate::matroid::{signature_from_circuits, BinaryMatroid};
use crate::splitting::split;

/// Order-preserving map, possibly run in parallel.
pub trait Executor: Sync {
    fn map<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send;
}

/// Runs everything on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        items.into_iter().map(f).collect()
    }
}

struct Fnv(u64);

impl Hasher for Fnv {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= u64::from(b);
            self.0 = self.0.wrapping_mul(0x100_0000_01b3);
        }
    }
}

/// Isomorphism data of a matroid and a hash of its invariant signature.
pub(crate) struct Keyed {
    hash: u64,
    data: IsoData,
}

impl Keyed {
    pub(crate) fn of(m: &BinaryMatroid) -> Self {
        let circuits = m.circuits();
        let sig = signature_from_circuits(m.len(), m.rank(), &circuits);
        let mut h = Fnv(0xcbf2_9ce4_8422_2325);
        sig.hash(&mut h);
        Self {
            hash: h.finish(),
            data: IsoData::new(m.len(), circuits),
        }
    }
}

/// Values keyed by isomorphism class.
pub(crate) struct ClassIndex<V> {
    buckets: BTreeMap<u64, Vec<(IsoData, V)>>,
    len: usize,
}

impl<V> ClassIndex<V> {
    pub(crate) fn new() -> Self {
        Self {
            buckets: BTreeMap::new(),
            len: 0,
        }
    }

    pub(crate) fn find(&self, k: &Keyed) -> Option<&V> {
        self.buckets
            .get(&k.hash)?
            .iter()
            .find(|(d, _)| iso::find(&k.data, d).is_some())
            .map(|(_, v)| v)
    }

    pub(crate) fn insert(&mut self, k: Keyed, v: V) {
        self.buckets.entry(k.hash).or_default().push((k.data, v));
        self.len += 1;
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }
}

const SHARDS: usize = 64;

/// Cographic test with verdicts remembered per isomorphism class; shareable across threads.
///
/// A simple, cosimple matroid has an excluded minor when it is one, or when some single-element
/// deletion or contraction has one.
pub struct CographicOracle {
    excluded: ExcludedMinors,
    members: Vec<(FMember, Keyed, usize, usize)>,
    shards: Vec<spin::Mutex<ClassIndex<bool>>>,
}

impl Default for CographicOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl CographicOracle {
    #[must_use]
    pub fn new() -> Self {
        let members = FMember::ALL
            .iter()
            .map(|&f| {
                let m = f.matroid();
                (f, Keyed::of(&m), m.len(), m.rank())
            })
            .collect();
        Self {
            excluded: ExcludedMinors::new(),
            members,
            shards: (0..SHARDS)
                .map(|_| spin::Mutex::new(ClassIndex::new()))
                .collect(),
        }
    }

    #[must_use]
    pub fn excluded(&self) -> &ExcludedMinors {
        &self.excluded
    }

    /// Number of remembered classes.
    #[must_use]
    pub fn memo_len(&self) -> usize {
        self.shards.iter().map(|s| s.lock().len()).sum()
    }

    /// The excluded minor `m` is isomorphic to, if any.
    fn member_of(&self, m: &BinaryMatroid, k: &Keyed) -> Option<FMember> {
        self.members
            .iter()
            .find(|(_, key, n, r)| {
                *n == m.len() && *r == m.rank() && iso::find(&k.data, &key.data).is_some()
            })
            .map(|(f, _, _, _)| *f)
    }

    #[must_use]
    pub fn is_cographic(&self, m: &BinaryMatroid) -> bool {
        let (core, _, _) = simple_cosimple_core(m);
        self.core_cographic(&core)
    }

    #[must_use]
    pub fn is_graphic(&self, m: &BinaryMatroid) -> bool {
        self.is_cographic(&m.dual())
    }

    fn core_cographic(&self, c: &BinaryMatroid) -> bool {
        if c.len() < 7 || c.rank() < 3 || c.len() - c.rank() < 3 {
            return true;
        }
        let key = Keyed::of(c);
        let shard = &self.shards[(key.hash % SHARDS as u64) as usize];
        if let Some(&v) = shard.lock().find(&key) {
            return v;
        }
        let verdict = self.member_of(c, &key).is_none()
            && (0..c.len()).all(|e| {
                self.is_cographic(&c.delete_set(1 << e))
                    && self.is_cographic(&c.contract_set(1 << e))
            });
        let mut s = shard.lock();
        if s.find(&key).is_none() {
            s.insert(key, verdict);
        }
        verdict
    }

    /// An excluded minor of `m` with a witness, or `None` when `m` is cographic.
    #[must_use]
    pub fn culprit(&self, m: &BinaryMatroid) -> Option<Culprit> {
        if self.is_cographic(m) {
            None
        } else {
            self.excluded.culprit(m)
        }
    }

    /// First `k`-set, in lexicographic order of sorted labels, whose splitting is not cographic.
    #[must_use]
    pub fn first_failing_split(&self, m: &BinaryMatroid, k: usize) -> Option<ElemSet> {
        let order = label_order(m);
        Combinations::new(&order, k).find(|&t| {
            let mut rows = m.row_masks().to_vec();
            rows.push(t);
            let s = BinaryMatroid::from_parts(m.labels().to_vec(), rows);
            !self.is_cographic(&s)
        })
    }

    /// Whether `m` has an M(K5) or M(K3,3) minor, with the witness.
    #[must_use]
    pub fn trivial_witness(&self, m: &BinaryMatroid) -> Option<Culprit> {
        self.excluded.kuratowski_minor(m)
    }

    /// Classification of every `k`-splitting of a graphic matroid.
    pub fn classify(
        &self,
        subject: &str,
        m: &BinaryMatroid,
        k: usize,
    ) -> Result<ObstructionReport> {
        check_k(k)?;
        if !self.is_graphic(m) {
            return Err(Error::Domain(format!("{subject} is not graphic")));
        }
        let trivial = self.trivial_witness(m);
        let minimality = Minimality {
            has_coloop: m.coloops() != 0,
            has_2cocircuit: !m.two_cocircuits().is_empty(),
            trivial_family: trivial.is_some(),
            is_minor_minimal: None,
        };
        let mut report = ObstructionReport {
            subject: subject.into(),
            matroid: m.clone(),
            t_size: k,
            witness_t: Vec::new(),
            classification: Classification::CographicForAllT,
            f_member_hit: None,
            trivial_witness: trivial,
            minimality,
        };
        if let Some(t) = self.first_failing_split(m, k) {
            let labels = m.label_list(t);
            let s = split(m, &labels)?;
            report.f_member_hit = self.excluded.culprit(&s);
            report.witness_t = labels;
            report.classification = Classification::NonCographic;
        }
        Ok(report)
    }

    /// Some `k`-splitting of `m` is not cographic.
    #[must_use]
    pub fn is_obstruction(&self, m: &BinaryMatroid, k: usize) -> bool {
        self.first_failing_split(m, k).is_some()
    }

    /// `m` is an obstruction and every single-element deletion and contraction is either not one
    /// or has an M(K5) or M(K3,3) minor.
    #[must_use]
    pub fn is_minor_minimal(&self, m: &BinaryMatroid, k: usize) -> bool {
        self.is_obstruction(m, k)
            && (0..m.len()).all(|e| {
                [m.delete_set(1 << e), m.contract_set(1 << e)]
                    .iter()
                    .all(|n| !self.is_obstruction(n, k) || self.trivial_witness(n).is_some())
            })
    }
}

fn check_k(k: usize) -> Result<()> {
    if (1..=3).contains(&k) {
        Ok(())
    } else {
        Err(Error::Domain(format!("splitting size {k} outside 1..=3")))
    }
}

fn label_order(m: &BinaryMatroid) -> Vec<usize> {
    let mut order: Vec<usize> = (0..m.len()).collect();
    order.sort_by(|&a, &b| m.label(a).cmp(m.label(b)));
    order
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    CographicForAllT,
    NonCographic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimality {
    pub has_coloop: bool,
    pub has_2cocircuit: bool,
    pub trivial_family: bool,
    /// `None` when not examined.
    pub is_minor_minimal: Option<bool>,
}

/// Verdict on all `k`-splittings of one graphic matroid.
#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub subject: String,
    pub matroid: BinaryMatroid,
    pub t_size: usize,
    /// Sorted labels of the first failing `T`; empty when every splitting is cographic.
    pub witness_t: Vec<String>,
    pub classification: Classification,
    /// Excluded minor of the split matroid, with a witness into it.
    pub f_member_hit: Option<Culprit>,
    /// M(K5) or M(K3,3) minor of the subject, when present.
    pub trivial_witness: Option<Culprit>,
    pub minimality: Minimality,
}

impl ObstructionReport {
    /// Replays every witness and recomputes the classification from scratch.
    pub fn replay(&self) -> Result<bool> {
        let oracle = CographicOracle::new();
        let fresh = oracle.classify(&self.subject, &self.matroid, self.t_size)?;
        let mut ok = fresh.classification == self.classification
            && fresh.witness_t == self.witness_t
            && fresh.f_member_hit == self.f_member_hit
            && fresh.trivial_witness == self.trivial_witness
            && fresh.minimality.has_coloop == self.minimality.has_coloop
            && fresh.minimality.has_2cocircuit == self.minimality.has_2cocircuit
            && fresh.minimality.trivial_family == self.minimality.trivial_family;
        if self.classification == Classification::NonCographic {
            let s = split(&self.matroid, &self.witness_t)?;
            ok &= self
                .f_member_hit
                .as_ref()
                .is_some_and(|c| c.witness.verify(&s, &c.member.matroid()));
        }
        if let Some(c) = &self.trivial_witness {
            ok &= c.witness.verify(&self.matroid, &c.member.matroid());
        }
        if let Some(minimal) = self.minimality.is_minor_minimal {
            ok &= oracle.is_minor_minimal(&self.matroid, self.t_size) == minimal;
        }
        Ok(ok)
    }
}

/// Classification of every `k`-splitting of a graphic matroid.
pub fn classify_splittings(m: &BinaryMatroid, k: usize) -> Result<ObstructionReport> {
    CographicOracle::new().classify("subject", m, k)
}

/// Which alternative of the localization argument a minor falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalCase {
    /// `N_T` has the excluded minor by deletions and contractions outside `T` only.
    SplitIsMinor,
    /// Some contraction inside `T` is needed, but no deletion inside `T`.
    ContractInT,
    /// Some but not all of `T` is deleted: `N` extends a smaller obstruction.
    ExtensionOfSmaller,
    /// `N` has an M(K5) or M(K3,3) minor, or all of `T` is deleted.
    Trivial,
}

/// A minor of the host containing `T` whose splitting at `T` still has the excluded minor.
#[derive(Clone, Debug)]
pub struct Localization {
    pub minor: BinaryMatroid,
    /// Host labels removed to reach `minor`.
    pub deleted: Vec<String>,
    pub contracted: Vec<String>,
    pub case: LocalCase,
    /// Parts of `T` deleted and contracted inside `minor_T` to reach the excluded minor.
    pub t_deleted: Vec<String>,
    pub t_contracted: Vec<String>,
    pub witness: crate::minor::MinorWitness,
}

fn localize_once(
    n: &BinaryMatroid,
    t: &[String],
    f: &BinaryMatroid,
) -> Option<(
    crate::minor::MinorWitness,
    Vec<String>,
    Vec<String>,
    Vec<String>,
    Vec<String>,
)> {
    let s = split(n, t).ok()?;
    let w = s.has_minor(f)?;
    let in_t = |l: &String| t.contains(l);
    let (t1p, t1pp): (Vec<String>, Vec<String>) = w.deleted.iter().cloned().partition(in_t);
    let (t2p, t2pp): (Vec<String>, Vec<String>) = w.contracted.iter().cloned().partition(in_t);
    Some((w, t1p, t1pp, t2p, t2pp))
}

/// Pushes the removals outside `T` from the split matroid down to the host, then strips coloops
/// and series elements outside `T` while the splitting keeps an `f` minor.
pub fn localize_minimal<S: AsRef<str>>(
    m: &BinaryMatroid,
    t: &[S],
    f: &BinaryMatroid,
) -> Result<Localization> {
    let t: Vec<String> = t.iter().map(|s| String::from(s.as_ref())).collect();
    m.set_of(&t)?;
    let (_, _, t1pp, _, t2pp) = localize_once(m, &t, f)
        .ok_or_else(|| Error::Domain("splitting has no such minor".into()))?;
    let deleted = t1pp.clone();
    let mut contracted = t2pp.clone();
    let mut n = m.delete(&t1pp)?.contract(&t2pp)?;
    let excluded = ExcludedMinors::new();
    loop {
        let (w, t1p, _, t2p, _) = localize_once(&n, &t, f)
            .ok_or_else(|| Error::Domain("localized minor lost the excluded minor".into()))?;
        let case = if excluded.kuratowski_minor(&n).is_some() || t1p.len() == t.len() {
            LocalCase::Trivial
        } else if !t1p.is_empty() {
            LocalCase::ExtensionOfSmaller
        } else if !t2p.is_empty() {
            LocalCase::ContractInT
        } else {
            LocalCase::SplitIsMinor
        };
        let done = |n: BinaryMatroid, case, deleted: Vec<String>, contracted: Vec<String>| {
            let mut deleted = deleted;
            let mut contracted = contracted;
            deleted.sort();
            contracted.sort();
            Localization {
                minor: n,
                deleted,
                contracted,
                case,
                t_deleted: t1p.clone(),
                t_contracted: t2p.clone(),
                witness: w.clone(),
            }
        };
        if matches!(case, LocalCase::Trivial | LocalCase::ExtensionOfSmaller) {
            return Ok(done(n, case, deleted, contracted));
        }
        let tset = n.set_of(&t)?;
        if n.coloops() & tset != 0 {
            return Ok(done(n, LocalCase::ExtensionOfSmaller, deleted, contracted));
        }
        let mut candidates: Vec<usize> = bits::members(n.coloops() & !tset).collect();
        for pair in n.two_cocircuits() {
            candidates.extend(bits::members(pair & !tset));
        }
        let next = candidates.into_iter().find_map(|e| {
            let smaller = n.contract_set(1 << e);
            localize_once(&smaller, &t, f).map(|_| (String::from(n.label(e)), smaller))
        });
        match next {
            Some((label, smaller)) => {
                contracted.push(label);
                n = smaller;
            }
            None => return Ok(done(n, case, deleted, contracted)),
        }
    }
}

/// What the search decided about one candidate.
enum Verdict {
    NotMinimal,
    NotGraphic,
    Obstruction,
    Good,
}

/// Result of [`search_forbidden_minors`].
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub k: usize,
    pub max_elements: usize,
    /// Minor-minimal matroids with a non-cographic `k`-splitting and no M(K5) or M(K3,3) minor.
    pub obstructions: Vec<ObstructionReport>,
    /// Minor-minimal ones set aside because they have an M(K5) or M(K3,3) minor.
    pub trivial: Vec<ObstructionReport>,
    /// `class_counts[n]`: graphic classes on `n` elements with every `k`-splitting cographic.
    pub class_counts: Vec<usize>,
}

impl SearchOutcome {
    /// Obstructions and trivial ones together, smallest first.
    #[must_use]
    pub fn all_minimal(&self) -> Vec<&ObstructionReport> {
        let mut v: Vec<&ObstructionReport> =
            self.obstructions.iter().chain(&self.trivial).collect();
        v.sort_by_key(|r| r.matroid.len());
        v
    }
}

/// Largest `max_elements` accepted by [`search_forbidden_minors`].
pub const MAX_SEARCH_ELEMENTS: usize = 11;

/// Finds every graphic matroid on at most `max_elements` elements that has a non-cographic
/// `k`-splitting while none of its single-element deletions and contractions has one.
///
/// Grows the classes of good graphic matroids (every `k`-splitting cographic) one element at a
/// time through all single-element binary extensions and coloop additions. A new candidate whose
/// single-element deletions and contractions are all good is graphic unless it is the dual of an
/// excluded minor, and is then either good or a minimal obstruction. Obstructions with an M(K5) or
/// M(K3,3) minor are reported separately with that minor's witness.
pub fn search_forbidden_minors<E: Executor>(
    k: usize,
    max_elements: usize,
    exec: &E,
) -> Result<SearchOutcome> {
    check_k(k)?;
    if max_elements > MAX_SEARCH_ELEMENTS {
        return Err(Error::Resource(format!(
            "max_elements {max_elements} exceeds {MAX_SEARCH_ELEMENTS}"
        )));
    }
    let oracle = CographicOracle::new();
    let non_graphic: Vec<(usize, usize, Keyed)> = FMember::ALL
        .iter()
        .map(|f| {
            let d = f.matroid().dual();
            (d.len(), d.rank(), Keyed::of(&d))
        })
        .collect();
    let empty = BinaryMatroid::from_rows::<&str>(&[], &[])?;
    let mut level = vec![empty.clone()];
    let mut index = ClassIndex::new();
    index.insert(Keyed::of(&empty), ());
    let mut outcome = SearchOutcome {
        k,
        max_elements,
        obstructions: Vec::new(),
        trivial: Vec::new(),
        class_counts: vec![1],
    };
    for n in 0..max_elements {
        let label = format!("e{:02}", n + 1);
        // (signature hash, member, column); `u64::MAX` marks a coloop.
        let tagged: Vec<Vec<(u64, u32, u64)>> = exec.map((0..level.len()).collect(), |i| {
            let m = &level[i];
            let mut out = Vec::with_capacity((1 << m.rank()) + 1);
            for c in (0..1u64 << m.rank()).chain(core::iter::once(u64::MAX)) {
                let x = extend_or_coloop(m, &label, c);
                out.push((Keyed::of(&x).hash, i as u32, c));
            }
            out
        });
        let mut groups: BTreeMap<u64, Vec<(u32, u64)>> = BTreeMap::new();
        for (h, i, c) in tagged.into_iter().flatten() {
            groups.entry(h).or_default().push((i, c));
        }
        let reps: Vec<Vec<BinaryMatroid>> = exec.map(groups.into_values().collect(), |g| {
            let mut kept: Vec<(BinaryMatroid, Keyed)> = Vec::new();
            for (i, c) in g {
                let x = extend_or_coloop(&level[i as usize], &label, c);
                let key = Keyed::of(&x);
                if kept
                    .iter()
                    .all(|(_, k)| iso::find(&key.data, &k.data).is_none())
                {
                    kept.push((x, key));
                }
            }
            kept.into_iter().map(|(x, _)| x).collect()
        });
        let candidates: Vec<BinaryMatroid> = reps.into_iter().flatten().collect();
        let verdicts: Vec<(BinaryMatroid, Verdict)> = exec.map(candidates, |x| {
            let minimal = (0..x.len()).all(|e| {
                index.find(&Keyed::of(&x.delete_set(1 << e))).is_some()
                    && index.find(&Keyed::of(&x.contract_set(1 << e))).is_some()
            });
            if !minimal {
                return (x, Verdict::NotMinimal);
            }
            let key = Keyed::of(&x);
            let non_graphic = non_graphic.iter().any(|(n, r, k)| {
                *n == x.len() && *r == x.rank() && iso::find(&key.data, &k.data).is_some()
            });
            if non_graphic {
                return (x, Verdict::NotGraphic);
            }
            if oracle.is_obstruction(&x, k) {
                (x, Verdict::Obstruction)
            } else {
                (x, Verdict::Good)
            }
        });
        let mut next = Vec::new();
        let mut next_index = ClassIndex::new();
        for (x, v) in verdicts {
            match v {
                Verdict::NotMinimal | Verdict::NotGraphic => {}
                Verdict::Good => {
                    next_index.insert(Keyed::of(&x), ());
                    next.push(x);
                }
                Verdict::Obstruction => {
                    let trivial = oracle.trivial_witness(&x).is_some();
                    let name = if trivial {
                        format!("trivial-k{k}-n{}-{}", n + 1, outcome.trivial.len() + 1)
                    } else {
                        format!("k{k}-n{}-{}", n + 1, outcome.obstructions.len() + 1)
                    };
                    let mut r = oracle.classify(&name, &x, k)?;
                    r.minimality.is_minor_minimal = Some(true);
                    if trivial {
                        outcome.trivial.push(r);
                    } else {
                        outcome.obstructions.push(r);
                    }
                }
            }
        }
        outcome.class_counts.push(next.len());
        level = next;
        index = next_index;
    }
    Ok(outcome)
}

fn extend_or_coloop(m: &BinaryMatroid, label: &str, c: u64) -> BinaryMatroid {
    if c == u64::MAX {
        m.add_coloop(label).expect("fresh label")
    } else {
        m.extend(label, c).expect("column within rank")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cographic::{complete_graph, fano};

    #[test]
    fn oracle_agrees_with_direct_search_on_members() {
        let o = CographicOracle::new();
        for f in FMember::ALL {
            assert!(!o.is_cographic(&f.matroid()));
        }
        assert!(o.is_cographic(&complete_graph(4).circuit_matroid().unwrap()));
        assert!(!o.is_graphic(&fano()));
    }

    #[test]
    fn k4_has_no_bad_triple() {
        let m = complete_graph(4).circuit_matroid().unwrap();
        let r = classify_splittings(&m, 3).unwrap();
        assert_eq!(r.classification, Classification::CographicForAllT);
        assert!(r.replay().unwrap());
    }

    #[test]
    fn non_graphic_input_is_rejected() {
        assert!(matches!(
            classify_splittings(&fano(), 2),
            Err(Error::Domain(_))
        ));
    }
}
