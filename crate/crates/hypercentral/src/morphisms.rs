//! Automorphism groups, inner automorphisms, and invariance machinery for
//! actions of automorphism subgroups on finite groups.
//!
//! Composition convention: `a.compose(&b)` applies `b` first, so a subgroup
//! of automorphisms acts on the left. Semidirect products below use the
//! same convention, `(x, a)(y, b) = (x * a(y), a o b)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::{
    get_bit, mult_closure, quotient, set_bit, to_bits, Group, GroupMap, GroupTable, SubgroupRef,
    NORMAL_ENUM_CAP, TABLE_CAP,
};

/// Cap on |G| for automorphism search.
pub const AUT_SEARCH_CAP: usize = 128;

/// Default cap on the number of automorphisms materialized by
/// [`automorphism_group`]. Orders are still countable above this through
/// [`automorphism_order`].
pub const AUT_MEMBER_CAP: usize = 4096;

/// `a o b` on raw image arrays: applies `b` first.
#[inline]
fn compose_images(a: &[u16], b: &[u16]) -> Vec<u16> {
    b.iter().map(|&x| a[x as usize]).collect()
}

/// Node budget for the backtracking search, a safety valve for
/// pathological inputs.
const AUT_NODE_BUDGET: u64 = 500_000_000;

/// A bijective multiplication-preserving self-map of a group.
#[derive(Clone, PartialEq, Eq)]
pub struct Automorphism {
    group: Group,
    image: Vec<u16>,
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism of {}: {:?}", self.group.name(), self.image)
    }
}

impl Automorphism {
    /// Validates bijectivity and the homomorphism law.
    pub fn new(group: &Group, image: Vec<usize>) -> Result<Self> {
        let n = group.order();
        if image.len() != n {
            return Err(Error::IndexOutOfRange {
                index: image.len(),
                order: n,
            });
        }
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, order: n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotBijective { value: v });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if image[group.mul(a, b)] != group.mul(image[a], image[b]) {
                    return Err(Error::NotHomomorphism { a, b });
                }
            }
        }
        Ok(Automorphism {
            group: group.clone(),
            image: image.into_iter().map(|v| v as u16).collect(),
        })
    }

    pub(crate) fn from_raw_unchecked(group: Group, image: Vec<u16>) -> Self {
        Automorphism { group, image }
    }

    pub fn identity(group: &Group) -> Self {
        Automorphism {
            group: group.clone(),
            image: (0..group.order() as u16).collect(),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x] as usize
    }

    pub fn image_slice(&self) -> &[u16] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self o other`: applies `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        debug_assert!(Arc::ptr_eq(&self.group, &other.group));
        let image = other.image.iter().map(|&x| self.image[x as usize]).collect();
        Automorphism {
            group: self.group.clone(),
            image,
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut image = vec![0u16; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v as usize] = i as u16;
        }
        Automorphism {
            group: self.group.clone(),
            image,
        }
    }

    /// Order of the automorphism under composition.
    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = cur.compose(self);
            k += 1;
        }
        k
    }
}

/// Conjugation by `g`, `x -> g x g^-1`.
pub fn conjugation_by(group: &Group, g: usize) -> Automorphism {
    let image = (0..group.order())
        .map(|x| group.mul(group.mul(g, x), group.inv(g)) as u16)
        .collect();
    Automorphism {
        group: group.clone(),
        image,
    }
}

/// A subgroup of `Aut(G)` stored as an explicit closed member set with a
/// designated generating subset. Members are deduplicated by their image
/// arrays and kept sorted, which puts the identity automorphism first.
pub struct AutSubgroup {
    group: Group,
    members: Vec<Automorphism>,
    generators: Vec<usize>,
    index: HashMap<Vec<u16>, usize>,
    composition_group: OnceLock<Group>,
}

impl Clone for AutSubgroup {
    fn clone(&self) -> Self {
        AutSubgroup {
            group: self.group.clone(),
            members: self.members.clone(),
            generators: self.generators.clone(),
            index: self.index.clone(),
            composition_group: self.composition_group.clone(),
        }
    }
}

impl fmt::Debug for AutSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AutSubgroup(order {} on {})",
            self.members.len(),
            self.group.name()
        )
    }
}

impl PartialEq for AutSubgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
            && self.members.len() == other.members.len()
            && self.members.iter().all(|m| other.contains(m))
    }
}

impl AutSubgroup {
    /// Closure of the given automorphisms under composition.
    pub fn from_generators(group: &Group, gens: &[Automorphism]) -> Self {
        for a in gens {
            assert!(
                Arc::ptr_eq(a.group(), group),
                "automorphism belongs to a different group"
            );
        }
        let mut images: Vec<Vec<u16>> = vec![(0..group.order() as u16).collect()];
        let mut seen: HashMap<Vec<u16>, usize> = HashMap::new();
        seen.insert(images[0].clone(), 0);
        for a in gens {
            if !seen.contains_key(a.image_slice()) {
                seen.insert(a.image_slice().to_vec(), images.len());
                images.push(a.image_slice().to_vec());
            }
        }
        // multiplicative closure; a finite compose-closed set of bijections
        // containing its generators is a group
        let mut i = 0;
        while i < images.len() {
            let mut j = 0;
            while j < images.len() {
                let composed: Vec<u16> =
                    images[j].iter().map(|&x| images[i][x as usize]).collect();
                if !seen.contains_key(&composed) {
                    seen.insert(composed.clone(), images.len());
                    images.push(composed);
                }
                j += 1;
            }
            i += 1;
        }
        let gen_images: Vec<Vec<u16>> = gens.iter().map(|a| a.image_slice().to_vec()).collect();
        Self::from_images(group.clone(), images, &gen_images)
    }

    fn from_images(group: Group, mut images: Vec<Vec<u16>>, gen_images: &[Vec<u16>]) -> Self {
        images.sort_unstable();
        images.dedup();
        let index: HashMap<Vec<u16>, usize> = images
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let mut generators: Vec<usize> = gen_images
            .iter()
            .filter_map(|v| index.get(v).copied())
            .collect();
        generators.sort_unstable();
        generators.dedup();
        let members: Vec<Automorphism> = images
            .into_iter()
            .map(|image| Automorphism {
                group: group.clone(),
                image,
            })
            .collect();
        debug_assert!(members[0].is_identity());
        AutSubgroup {
            group,
            members,
            generators,
            index,
            composition_group: OnceLock::new(),
        }
    }

    /// Wraps an already-closed member set, choosing generators as a greedy
    /// prefix: walk the sorted members and adjoin each one not yet in the
    /// closure of those picked so far.
    pub(crate) fn from_closed_members(group: Group, images: Vec<Vec<u16>>) -> Self {
        let mut sorted = images;
        sorted.sort_unstable();
        sorted.dedup();
        let mut gen_images: Vec<Vec<u16>> = Vec::new();
        let mut list: Vec<Vec<u16>> = vec![(0..group.order() as u16).collect()];
        let mut seen: std::collections::HashSet<Vec<u16>> = list.iter().cloned().collect();
        for img in &sorted {
            if seen.contains(img) {
                continue;
            }
            gen_images.push(img.clone());
            // incremental closure with the new generator
            seen.insert(img.clone());
            list.push(img.clone());
            let mut frontier = vec![list.len() - 1];
            while let Some(xi) = frontier.pop() {
                let mut yi = 0;
                while yi < list.len() {
                    for composed in [
                        compose_images(&list[xi], &list[yi]),
                        compose_images(&list[yi], &list[xi]),
                    ] {
                        if seen.insert(composed.clone()) {
                            list.push(composed);
                            frontier.push(list.len() - 1);
                        }
                    }
                    yi += 1;
                }
            }
            if seen.len() == sorted.len() {
                break;
            }
        }
        Self::from_images(group, sorted, &gen_images)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Automorphism] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Automorphism {
        &self.members[i]
    }

    /// Indices of the designated generators within `members`.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn generators(&self) -> Vec<&Automorphism> {
        self.generators.iter().map(|&i| &self.members[i]).collect()
    }

    pub fn contains(&self, a: &Automorphism) -> bool {
        self.index.contains_key(a.image_slice())
    }

    pub fn index_of(&self, a: &Automorphism) -> Option<usize> {
        self.index.get(a.image_slice()).copied()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_abelian_action(&self) -> bool {
        let k = self.members.len();
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                self.members[i].compose(&self.members[j]).image
                    == self.members[j].compose(&self.members[i]).image
            })
        })
    }

    /// The abstract group of this automorphism set under composition,
    /// with element `i` corresponding to `members[i]`.
    pub fn as_group(&self) -> &Group {
        self.composition_group.get_or_init(|| {
            let k = self.members.len();
            let mut mul = vec![0u16; k * k];
            for i in 0..k {
                for j in 0..k {
                    let composed = self.members[i].compose(&self.members[j]);
                    mul[i * k + j] = self.index[composed.image_slice()] as u16;
                }
            }
            GroupTable::from_flat(mul, k, &format!("aut{}({})", k, self.group.name()))
                .expect("composition table of a closed automorphism set is a group")
        })
    }
}

// ---------------------------------------------------------------------------
// Automorphism group search
// ---------------------------------------------------------------------------

struct Level {
    gen: usize,
    /// Elements of the subgroup after adjoining `gen`, in discovery order.
    subgroup: Vec<usize>,
    /// `(elem, left, right)` with `elem = left * right` and both factors
    /// defined earlier; replaying this defines the partial map on the
    /// whole level.
    dag: Vec<(usize, usize, usize)>,
    /// Minimal `m >= 1` with `gen^m` in the previous subgroup.
    power: usize,
    power_target: usize,
    /// Candidate images, prefiltered by (element order, class size).
    candidates: Vec<usize>,
}

struct AutSearch<'g> {
    g: &'g GroupTable,
    gens: Vec<usize>,
    levels: Vec<Level>,
    phi: Vec<u16>,
    used: Vec<bool>,
    nodes: u64,
}

const UNDEF: u16 = u16::MAX;

enum SearchOutcome {
    Done,
    LimitHit,
}

impl<'g> AutSearch<'g> {
    fn new(g: &'g Group) -> Self {
        let n = g.order();
        // greedy generating set: repeatedly add the element with the
        // largest closure gain
        let mut gens: Vec<usize> = Vec::new();
        let mut have = vec![g.identity()];
        while have.len() < n {
            let mut best: Option<(usize, usize)> = None;
            for x in g.elements() {
                if have.binary_search(&x).is_ok() {
                    continue;
                }
                let mut trial = have.clone();
                trial.push(x);
                let size = mult_closure(g, &trial).len();
                if best.map_or(true, |(bs, _)| size > bs) {
                    best = Some((size, x));
                }
            }
            let (_, x) = best.expect("proper subgroup has an element outside");
            gens.push(x);
            let mut trial = have;
            trial.push(x);
            have = mult_closure(g, &trial);
        }

        // per-element invariants for candidate filtering
        let orders = g.element_orders().to_vec();
        let class_size: Vec<usize> = (0..n)
            .map(|x| g.conjugacy_classes()[g.class_index_of(x)].len())
            .collect();

        let mut levels = Vec::with_capacity(gens.len());
        let mut prev: Vec<usize> = vec![g.identity()];
        for &gen in &gens {
            let mut list = prev.clone();
            let mut known = to_bits(n, &list);
            if !get_bit(&known, gen) {
                set_bit(&mut known, gen);
                list.push(gen);
            }
            let mut dag = Vec::new();
            let mut i = 0;
            while i < list.len() {
                let mut j = 0;
                while j < list.len() {
                    let p = g.mul(list[i], list[j]);
                    if !get_bit(&known, p) {
                        set_bit(&mut known, p);
                        dag.push((p, list[i], list[j]));
                        list.push(p);
                    }
                    j += 1;
                }
                i += 1;
            }
            let prev_bits = to_bits(n, &prev);
            let mut power = 1;
            let mut acc = gen;
            while !get_bit(&prev_bits, acc) {
                acc = g.mul(acc, gen);
                power += 1;
            }
            let candidates: Vec<usize> = g
                .elements()
                .filter(|&y| orders[y] == orders[gen] && class_size[y] == class_size[gen])
                .collect();
            levels.push(Level {
                gen,
                subgroup: list.clone(),
                dag,
                power,
                power_target: acc,
                candidates,
            });
            prev = list;
            prev.sort_unstable();
        }

        AutSearch {
            g,
            gens,
            levels,
            phi: vec![UNDEF; n],
            used: vec![false; n],
            nodes: 0,
        }
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[u16]) -> bool) -> Result<SearchOutcome> {
        self.phi[self.g.identity()] = self.g.identity() as u16;
        self.used[self.g.identity()] = true;
        if self.levels.is_empty() {
            // trivial group
            let image: Vec<u16> = (0..self.g.order() as u16).collect();
            return Ok(if visit(&image) {
                SearchOutcome::Done
            } else {
                SearchOutcome::LimitHit
            });
        }
        let r = self.descend(0, visit)?;
        self.phi[self.g.identity()] = UNDEF;
        self.used[self.g.identity()] = false;
        Ok(r)
    }

    fn descend(&mut self, level: usize, visit: &mut dyn FnMut(&[u16]) -> bool) -> Result<SearchOutcome> {
        self.nodes += 1;
        if self.nodes > AUT_NODE_BUDGET {
            return Err(Error::CapExceeded {
                what: "automorphism search nodes",
                size: usize::MAX,
                cap: AUT_NODE_BUDGET as usize,
            });
        }
        for ci in 0..self.levels[level].candidates.len() {
            let y = self.levels[level].candidates[ci];
            if self.used[y] {
                continue;
            }
            // power constraint: gen^m lands in the previous subgroup, so
            // y^m must land on its (already fixed) image
            let power = self.levels[level].power;
            let target = self.levels[level].power_target;
            if self.g.pow(y, power) != self.phi[target] as usize {
                continue;
            }
            if let Some(journal) = self.extend(level, y) {
                let ok = self.check_hom(level);
                if ok {
                    if level + 1 == self.levels.len() {
                        if !visit(&self.phi) {
                            self.retract(&journal);
                            return Ok(SearchOutcome::LimitHit);
                        }
                    } else {
                        match self.descend(level + 1, visit)? {
                            SearchOutcome::Done => {}
                            SearchOutcome::LimitHit => {
                                self.retract(&journal);
                                return Ok(SearchOutcome::LimitHit);
                            }
                        }
                    }
                }
                self.retract(&journal);
            }
        }
        Ok(SearchOutcome::Done)
    }

    /// Defines the partial map on the new level via the DAG. Returns the
    /// journal of assigned elements, or None when injectivity fails.
    fn extend(&mut self, level: usize, y: usize) -> Option<Vec<usize>> {
        let mut journal = Vec::with_capacity(self.levels[level].dag.len() + 1);
        let gen = self.levels[level].gen;
        if self.phi[gen] == UNDEF {
            if self.used[y] {
                return None;
            }
            self.phi[gen] = y as u16;
            self.used[y] = true;
            journal.push(gen);
        } else if self.phi[gen] as usize != y {
            return None;
        }
        let dag_len = self.levels[level].dag.len();
        for k in 0..dag_len {
            let (p, l, r) = self.levels[level].dag[k];
            let val = self.g.mul(self.phi[l] as usize, self.phi[r] as usize);
            if self.used[val] {
                self.retract(&journal);
                return None;
            }
            self.phi[p] = val as u16;
            self.used[val] = true;
            journal.push(p);
        }
        Some(journal)
    }

    fn retract(&mut self, journal: &[usize]) {
        for &p in journal {
            self.used[self.phi[p] as usize] = false;
            self.phi[p] = UNDEF;
        }
    }

    /// Verifies `phi(x * g_j) = phi(x) * phi(g_j)` for every `x` in the
    /// current subgroup and every generator so far. At the last level this
    /// is a full homomorphism check.
    fn check_hom(&self, level: usize) -> bool {
        let sub = &self.levels[level].subgroup;
        for j in 0..=level {
            let gj = self.gens[j];
            let pgj = self.phi[gj] as usize;
            for &x in sub {
                if self.phi[self.g.mul(x, gj)] as usize
                    != self.g.mul(self.phi[x] as usize, pgj)
                {
                    return false;
                }
            }
        }
        true
    }
}

fn check_aut_cap(g: &Group) -> Result<()> {
    if g.order() > AUT_SEARCH_CAP {
        return Err(Error::CapExceeded {
            what: "automorphism search",
            size: g.order(),
            cap: AUT_SEARCH_CAP,
        });
    }
    Ok(())
}

/// The full automorphism group, materialized, with the default member cap.
pub fn automorphism_group(g: &Group) -> Result<AutSubgroup> {
    automorphism_group_limited(g, AUT_MEMBER_CAP)
}

/// The full automorphism group, failing fast once more than `max_members`
/// automorphisms have been found.
pub fn automorphism_group_limited(g: &Group, max_members: usize) -> Result<AutSubgroup> {
    check_aut_cap(g)?;
    let mut found: Vec<Vec<u16>> = Vec::new();
    let mut over = false;
    let mut search = AutSearch::new(g);
    search.run(&mut |image| {
        if found.len() >= max_members {
            over = true;
            return false;
        }
        found.push(image.to_vec());
        true
    })?;
    if over {
        return Err(Error::CapExceeded {
            what: "automorphism group members",
            size: max_members + 1,
            cap: max_members,
        });
    }
    Ok(AutSubgroup::from_closed_members(g.clone(), found))
}

/// `|Aut(G)|` without materializing the group: closed-form for abelian
/// groups, leaf counting in the backtracking search otherwise.
pub fn automorphism_order(g: &Group) -> Result<u128> {
    if g.is_abelian() {
        return Ok(abelian_aut_order(g));
    }
    check_aut_cap(g)?;
    let mut count: u128 = 0;
    let mut search = AutSearch::new(g);
    search.run(&mut |_| {
        count += 1;
        true
    })?;
    Ok(count)
}

/// Order of the automorphism group of an abelian group, from its primary
/// decomposition: for each prime, the invariant exponents e_1 <= ... <= e_k
/// give
///   prod_i (p^{d_i} - p^{i-1}) * prod_j p^{e_j (k - d_j)}
///   * prod_i p^{(e_i - 1)(k - c_i + 1)}
/// where d_i / c_i are the largest / smallest indices sharing e_i.
pub fn abelian_aut_order(g: &Group) -> u128 {
    assert!(g.is_abelian(), "closed-form order needs an abelian group");
    let orders = g.element_orders();
    let mut n = g.order();
    let mut total: u128 = 1;
    let mut p = 2usize;
    while n > 1 {
        if n % p == 0 {
            // count elements of order dividing p^j to recover exponents
            let mut counts = Vec::new(); // counts[j] = #{x : ord(x) | p^j}
            counts.push(1usize);
            loop {
                let pj = p.pow(counts.len() as u32) as usize;
                let c = orders
                    .iter()
                    .filter(|&&o| {
                        let o = o as usize;
                        pj % o == 0 && is_prime_power(o, p)
                    })
                    .count();
                if c == *counts.last().unwrap() {
                    break;
                }
                counts.push(c);
            }
            let logs: Vec<u32> = counts.iter().map(|&c| ilog(c, p)).collect();
            let mut k_ge: Vec<u32> = Vec::new(); // #{i : e_i >= j} for j = 1..
            for j in 1..logs.len() {
                k_ge.push(logs[j] - logs[j - 1]);
            }
            let mut exponents: Vec<u32> = Vec::new();
            for (j, &kj) in k_ge.iter().enumerate() {
                let next = k_ge.get(j + 1).copied().unwrap_or(0);
                for _ in 0..(kj - next) {
                    exponents.push(j as u32 + 1);
                }
            }
            exponents.sort_unstable();
            total *= hillar_rhea(p as u128, &exponents);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    total
}

fn is_prime_power(mut o: usize, p: usize) -> bool {
    while o % p == 0 {
        o /= p;
    }
    o == 1
}

fn ilog(mut c: usize, p: usize) -> u32 {
    let mut l = 0;
    while c > 1 {
        debug_assert_eq!(c % p, 0);
        c /= p;
        l += 1;
    }
    l
}

fn hillar_rhea(p: u128, e: &[u32]) -> u128 {
    let k = e.len();
    let mut total: u128 = 1;
    for i in 0..k {
        let d = (0..k).filter(|&l| e[l] == e[i]).max().unwrap();
        total *= p.pow(d as u32 + 1) - p.pow(i as u32);
    }
    for j in 0..k {
        let d = (0..k).filter(|&l| e[l] == e[j]).max().unwrap();
        total *= p.pow(e[j] * (k - 1 - d) as u32);
    }
    for i in 0..k {
        let c = (0..k).filter(|&l| e[l] == e[i]).min().unwrap();
        total *= p.pow((e[i] - 1) * (k - c) as u32);
    }
    total
}

// ---------------------------------------------------------------------------
// Inner automorphisms and action machinery
// ---------------------------------------------------------------------------

/// `Inn(G)` together with the natural map `g -> conjugation by g` into its
/// composition group.
pub fn inner_automorphisms(g: &Group) -> (AutSubgroup, GroupMap) {
    let images: Vec<Vec<u16>> = g
        .elements()
        .map(|x| conjugation_by(g, x).image)
        .collect();
    let inn = AutSubgroup::from_closed_members(g.clone(), images);
    let target = inn.as_group().clone();
    let image: Vec<usize> = g
        .elements()
        .map(|x| inn.index_of(&conjugation_by(g, x)).unwrap())
        .collect();
    let bar = GroupMap::new_unchecked(g.clone(), target, image);
    (inn, bar)
}

/// True iff conjugating every member of `a` by every inner automorphism
/// stays inside `a`.
pub fn is_normalized_by_inner(g: &Group, a: &AutSubgroup) -> bool {
    assert!(Arc::ptr_eq(g, a.group()));
    for x in g.elements() {
        let bar = conjugation_by(g, x);
        let bar_inv = bar.inverse();
        for m in a.members() {
            let conjugated = bar_inv.compose(m).compose(&bar);
            if !a.contains(&conjugated) {
                return false;
            }
        }
    }
    true
}

/// Smallest subgroup containing `seed` that is closed under the group
/// operations and the action of every member of `a`.
pub fn a_invariant_closure(g: &Group, a: &AutSubgroup, seed: &[usize]) -> SubgroupRef {
    // orbit-close the seed under the action first; the subgroup generated
    // by an A-invariant set is A-invariant
    let mut elems: Vec<usize> = seed.to_vec();
    let mut bits = to_bits(g.order(), &elems);
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i];
        for m in a.members() {
            let y = m.apply(x);
            if !get_bit(&bits, y) {
                set_bit(&mut bits, y);
                elems.push(y);
            }
        }
        i += 1;
    }
    SubgroupRef::from_sorted_unchecked(g.clone(), mult_closure(g, &elems))
}

/// `C_G(A)`: the elements fixed by every member of `a`.
pub fn fixed_points(g: &Group, a: &AutSubgroup) -> SubgroupRef {
    let elems: Vec<usize> = g
        .elements()
        .filter(|&x| a.members().iter().all(|m| m.apply(x) == x))
        .collect();
    SubgroupRef::from_sorted_unchecked(g.clone(), elems)
}

/// The action induced by `a` on `G/N`, with duplicate induced maps merged.
/// Returns the quotient, the projection, and the induced subgroup, which
/// may be smaller than `a`.
pub fn restrict_action_to_quotient(
    g: &Group,
    n: &SubgroupRef,
    a: &AutSubgroup,
) -> Result<(Group, GroupMap, AutSubgroup)> {
    for (i, m) in a.members().iter().enumerate() {
        for &x in n.elems() {
            if !n.contains(m.apply(x)) {
                return Err(Error::NotInvariant { auto: i, elem: x });
            }
        }
    }
    let (q, proj) = quotient(g, n)?;
    let induce = |m: &Automorphism| -> Automorphism {
        let mut image = vec![UNDEF; q.order()];
        for x in g.elements() {
            let from = proj.apply(x);
            let to = proj.apply(m.apply(x)) as u16;
            debug_assert!(image[from] == UNDEF || image[from] == to);
            image[from] = to;
        }
        Automorphism::from_raw_unchecked(q.clone(), image)
    };
    let gen_autos: Vec<Automorphism> = a.generators().into_iter().map(induce).collect();
    let induced = AutSubgroup::from_generators(&q, &gen_autos);
    Ok((q, proj, induced))
}

/// Semidirect product `N x| A` on pairs `(x, a) -> x * |A| + a`, with
/// `(x, a)(y, b) = (x * a(y), a o b)`. Returns the product and the two
/// canonical embeddings of `N` and of the abstract group of `A`.
pub fn semidirect_product(n: &Group, a: &AutSubgroup) -> Result<(Group, GroupMap, GroupMap)> {
    assert!(Arc::ptr_eq(n, a.group()));
    let k = a.order();
    let size = n.order() * k;
    if size > TABLE_CAP {
        return Err(Error::CapExceeded {
            what: "semidirect product",
            size,
            cap: TABLE_CAP,
        });
    }
    let a_table = a.as_group();
    let mut mul = vec![0u16; size * size];
    for x in n.elements() {
        for i in 0..k {
            let row = x * k + i;
            let m = a.member(i);
            for y in n.elements() {
                let xy = n.mul(x, m.apply(y));
                for j in 0..k {
                    mul[row * size + (y * k + j)] = (xy * k + a_table.mul(i, j)) as u16;
                }
            }
        }
    }
    let name = format!("{}:aut{}", n.name(), k);
    let s = GroupTable::from_flat(mul, size, &name)?;
    // identity automorphism sorts first, so index 0
    debug_assert!(a.member(0).is_identity());
    let embed_n = GroupMap::new_unchecked(
        n.clone(),
        s.clone(),
        n.elements().map(|x| x * k).collect(),
    );
    let embed_a = GroupMap::new_unchecked(a_table.clone(), s.clone(), (0..k).collect());
    Ok((s, embed_n, embed_a))
}

/// All normal subgroups invariant under `a`, by the same class-closure
/// breadth-first search as plain normal subgroup enumeration, with orbits
/// under `a` adjoined.
pub fn a_invariant_normal_subgroups(g: &Group, a: &AutSubgroup) -> Result<Vec<SubgroupRef>> {
    if g.order() > NORMAL_ENUM_CAP {
        return Err(Error::CapExceeded {
            what: "normal subgroup enumeration",
            size: g.order(),
            cap: NORMAL_ENUM_CAP,
        });
    }
    let classes = g.conjugacy_classes().to_vec();
    let close = |seed: &[usize]| -> Vec<usize> {
        // close pointwise under conjugacy classes and the action, then
        // multiplicatively
        let mut elems: Vec<usize> = seed.to_vec();
        let mut bits = to_bits(g.order(), &elems);
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &y in &classes[g.class_index_of(x)] {
                if !get_bit(&bits, y) {
                    set_bit(&mut bits, y);
                    elems.push(y);
                }
            }
            for m in a.members() {
                let y = m.apply(x);
                if !get_bit(&bits, y) {
                    set_bit(&mut bits, y);
                    elems.push(y);
                }
            }
            i += 1;
        }
        mult_closure(g, &elems)
    };
    let trivial = vec![g.identity()];
    let mut seen = std::collections::HashSet::new();
    seen.insert(trivial.clone());
    let mut queue = vec![trivial];
    let mut found = Vec::new();
    while let Some(current) = queue.pop() {
        found.push(current.clone());
        let have = to_bits(g.order(), &current);
        for cls in &classes {
            if get_bit(&have, cls[0]) {
                continue;
            }
            let mut gens = current.clone();
            gens.push(cls[0]);
            let closure = close(&gens);
            if seen.insert(closure.clone()) {
                queue.push(closure);
            }
        }
    }
    found.sort_unstable_by(|x, y| (x.len(), x.as_slice()).cmp(&(y.len(), y.as_slice())));
    Ok(found
        .into_iter()
        .map(|elems| SubgroupRef::from_sorted_unchecked(g.clone(), elems))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::center;

    fn cyclic(n: usize) -> Group {
        catalog::cyclic(n).unwrap()
    }

    /// Brute-force oracle: test all n! permutations of the element set for
    /// table preservation. Feasible to order 8.
    fn brute_force_aut_count(g: &Group) -> usize {
        let n = g.order();
        assert!(n <= 8);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0;
        permute(&mut perm, 0, &mut |p| {
            let ok = (0..n).all(|a| (0..n).all(|b| p[g.mul(a, b)] == g.mul(p[a], p[b])));
            if ok {
                count += 1;
            }
        });
        count
    }

    fn permute(arr: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == arr.len() {
            visit(arr);
            return;
        }
        for i in k..arr.len() {
            arr.swap(k, i);
            permute(arr, k + 1, visit);
            arr.swap(k, i);
        }
    }

    #[test]
    fn aut_of_cyclic_five_has_order_four() {
        let g = cyclic(5);
        // oracle: try all four candidate generator images by hand
        let mut count = 0;
        for target in 1..5usize {
            let image: Vec<usize> = (0..5).map(|x| x * target % 5).collect();
            if Automorphism::new(&g, image).is_ok() {
                count += 1;
            }
        }
        assert_eq!(count, 4);
        let aut = automorphism_group(&g).unwrap();
        assert_eq!(aut.order(), 4);
        assert_eq!(automorphism_order(&g).unwrap(), 4);
    }

    #[test]
    fn aut_of_s3_has_order_six_all_inner() {
        let g = catalog::symmetric(3).unwrap();
        assert_eq!(brute_force_aut_count(&g), 6);
        let aut = automorphism_group(&g).unwrap();
        assert_eq!(aut.order(), 6);
        let (inn, _) = inner_automorphisms(&g);
        assert_eq!(inn, aut);
    }

    #[test]
    fn aut_of_q8_has_order_twenty_four() {
        let g = catalog::quaternion(8).unwrap();
        assert_eq!(brute_force_aut_count(&g), 24);
        assert_eq!(automorphism_group(&g).unwrap().order(), 24);
        assert_eq!(automorphism_order(&g).unwrap(), 24);
    }

    #[test]
    fn aut_of_d8_has_order_eight() {
        let g = catalog::dihedral(8).unwrap();
        assert_eq!(brute_force_aut_count(&g), 8);
        assert_eq!(automorphism_group(&g).unwrap().order(), 8);
    }

    #[test]
    fn aut_of_elementary_abelian_eight_is_psl_size() {
        let g = catalog::elementary_abelian(2, 3).unwrap();
        // independent oracle: count invertible 3x3 matrices over F2
        let mut invertible = 0;
        for mask in 0u32..512 {
            let m: Vec<u64> = (0..3).map(|r| ((mask >> (3 * r)) & 7) as u64).collect();
            // Gaussian elimination over F2
            let mut rows = m.clone();
            let mut rank = 0;
            for col in 0..3 {
                if let Some(pivot) = (rank..3).find(|&r| rows[r] >> col & 1 == 1) {
                    rows.swap(rank, pivot);
                    for r in 0..3 {
                        if r != rank && rows[r] >> col & 1 == 1 {
                            rows[r] ^= rows[rank];
                        }
                    }
                    rank += 1;
                }
            }
            if rank == 3 {
                invertible += 1;
            }
        }
        assert_eq!(invertible, 168);
        assert_eq!(brute_force_aut_count(&g), 168);
        assert_eq!(automorphism_group(&g).unwrap().order(), 168);
        assert_eq!(abelian_aut_order(&g), 168);
    }

    #[test]
    fn abelian_aut_order_matches_search_on_mixed_groups() {
        for (p, k) in [(2, 2), (3, 2), (2, 3)] {
            let g = catalog::elementary_abelian(p, k).unwrap();
            assert_eq!(
                abelian_aut_order(&g),
                automorphism_group(&g).unwrap().order() as u128
            );
        }
        // non-homocyclic: C4 x C2, C8 x C2, C6
        for (a, b, expect) in [(4, 2, 8u128), (8, 2, 16), (2, 3, 2)] {
            let g = crate::group::direct_product(&cyclic(a), &cyclic(b)).unwrap();
            assert_eq!(abelian_aut_order(&g), expect);
            assert_eq!(
                abelian_aut_order(&g),
                automorphism_group(&g).unwrap().order() as u128
            );
        }
    }

    #[test]
    fn inner_automorphisms_of_abelian_group_are_trivial() {
        let g = cyclic(12);
        let (inn, bar) = inner_automorphisms(&g);
        assert!(inn.is_trivial());
        assert_eq!(bar.kernel().order(), 12);
    }

    #[test]
    fn inner_automorphism_count_is_index_of_center() {
        for g in [
            catalog::symmetric(3).unwrap(),
            catalog::quaternion(8).unwrap(),
            catalog::dihedral(16).unwrap(),
        ] {
            let (inn, bar) = inner_automorphisms(&g);
            assert_eq!(inn.order() * center(&g).order(), g.order());
            assert_eq!(bar.kernel(), center(&g));
        }
    }

    #[test]
    fn inn_is_normal_in_aut() {
        for g in [
            catalog::symmetric(3).unwrap(),
            catalog::quaternion(8).unwrap(),
            catalog::dihedral(8).unwrap(),
        ] {
            let (inn, _) = inner_automorphisms(&g);
            let aut = automorphism_group(&g).unwrap();
            assert!(is_normalized_by_inner(&g, &inn));
            assert!(is_normalized_by_inner(&g, &aut));
            // conjugation scan: inn is normal in aut
            for m in aut.members() {
                let mi = m.inverse();
                for h in inn.members() {
                    assert!(inn.contains(&mi.compose(h).compose(m)));
                }
            }
        }
    }

    #[test]
    fn fixed_points_of_identity_action_is_whole_group() {
        let g = catalog::quaternion(8).unwrap();
        let a = AutSubgroup::from_generators(&g, &[]);
        assert_eq!(fixed_points(&g, &a).order(), 8);
    }

    #[test]
    fn fixed_points_of_inner_action_is_the_center() {
        for g in [
            catalog::symmetric(4).unwrap(),
            catalog::quaternion(8).unwrap(),
            catalog::dihedral(12).unwrap(),
        ] {
            let (inn, _) = inner_automorphisms(&g);
            assert_eq!(fixed_points(&g, &inn), center(&g));
        }
    }

    #[test]
    fn a_invariant_closure_of_empty_set_is_trivial() {
        let g = catalog::symmetric(3).unwrap();
        let aut = automorphism_group(&g).unwrap();
        assert!(a_invariant_closure(&g, &aut, &[]).is_trivial());
    }

    #[test]
    fn a_invariant_closure_is_idempotent_and_monotone() {
        let g = catalog::quaternion(8).unwrap();
        let aut = automorphism_group(&g).unwrap();
        let small = a_invariant_closure(&g, &aut, &[1]);
        let again = a_invariant_closure(&g, &aut, small.elems());
        assert_eq!(small, again);
        let bigger = a_invariant_closure(&g, &aut, &[1, 2]);
        assert!(small.is_subset_of(&bigger));
    }

    #[test]
    fn restricting_to_trivial_quotient_gives_trivial_action() {
        let g = catalog::symmetric(3).unwrap();
        let (inn, _) = inner_automorphisms(&g);
        let whole = SubgroupRef::whole(&g);
        let (q, _, induced) = restrict_action_to_quotient(&g, &whole, &inn).unwrap();
        assert_eq!(q.order(), 1);
        assert!(induced.is_trivial());
    }

    #[test]
    fn restricting_by_trivial_subgroup_relabels_the_action() {
        let g = catalog::quaternion(8).unwrap();
        let (inn, _) = inner_automorphisms(&g);
        let triv = SubgroupRef::trivial(&g);
        let (q, _, induced) = restrict_action_to_quotient(&g, &triv, &inn).unwrap();
        assert_eq!(q.order(), 8);
        assert_eq!(induced.order(), inn.order());
    }

    #[test]
    fn semidirect_with_trivial_action_relabels() {
        let g = catalog::quaternion(8).unwrap();
        let a = AutSubgroup::from_generators(&g, &[]);
        let (s, embed_n, _) = semidirect_product(&g, &a).unwrap();
        assert_eq!(s.order(), 8);
        assert!(embed_n.is_bijective());
    }

    #[test]
    fn holomorph_of_c3_is_s3_shaped() {
        let g = cyclic(3);
        let aut = automorphism_group(&g).unwrap();
        assert_eq!(aut.order(), 2);
        let (s, _, _) = semidirect_product(&g, &aut).unwrap();
        assert_eq!(s.order(), 6);
        assert!(center(&s).is_trivial());
    }

    #[test]
    fn swap_action_on_three_squared_gives_order_eighteen() {
        let g = catalog::elementary_abelian(3, 2).unwrap();
        // swap coordinates: index c0 + 3 c1 -> c1 + 3 c0
        let image: Vec<usize> = (0..9).map(|x| (x / 3) + 3 * (x % 3)).collect();
        let swap = Automorphism::new(&g, image).unwrap();
        let a = AutSubgroup::from_generators(&g, &[swap]);
        assert_eq!(a.order(), 2);
        let (s, _, _) = semidirect_product(&g, &a).unwrap();
        assert_eq!(s.order(), 18);
    }

    #[test]
    fn automorphisms_preserve_element_order() {
        for g in [catalog::symmetric(4).unwrap(), catalog::dihedral(16).unwrap()] {
            let aut = automorphism_group(&g).unwrap();
            for m in aut.members() {
                for x in g.elements() {
                    assert_eq!(g.element_order(x), g.element_order(m.apply(x)));
                }
            }
        }
    }

    #[test]
    fn member_limit_reports_cap_exceeded() {
        let g = catalog::quaternion(8).unwrap();
        match automorphism_group_limited(&g, 10) {
            Err(Error::CapExceeded { .. }) => {}
            other => panic!("expected cap, got {other:?}"),
        }
    }

    #[test]
    fn a_invariant_normal_subgroups_of_q8_under_full_aut() {
        let g = catalog::quaternion(8).unwrap();
        let aut = automorphism_group(&g).unwrap();
        // the three cyclic 4s fuse under Aut(Q8)
        let subs = a_invariant_normal_subgroups(&g, &aut).unwrap();
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 8]);
        let plain = g.normal_subgroups().unwrap();
        assert_eq!(plain.len(), 6);
    }
}
