//! The group catalog: named constructors for the standard small-group
//! families the verification sweeps run over, plus per-entry stored
//! actions for the action-aware checks.

use crate::error::{Error, Result};
use crate::group::{direct_product, Group, GroupTable, TABLE_CAP};
use crate::morphisms::{AutSubgroup, Automorphism};
use crate::theorems::example::build_example;

/// Direct-product catalog entries stay within this order.
pub const PRODUCT_CAP: usize = 64;

/// Cyclic group of order `n` under addition mod `n`.
pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 || n > TABLE_CAP {
        return Err(Error::CapExceeded {
            what: "cyclic group",
            size: n,
            cap: TABLE_CAP,
        });
    }
    let mut mul = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            mul[i * n + j] = ((i + j) % n) as u16;
        }
    }
    GroupTable::from_flat(mul, n, &format!("C{n}"))
}

/// Dihedral group of the given (even) order: rotations `r^i` on indices
/// `0..m`, reflections `r^i s` on `m..2m`.
pub fn dihedral(order: usize) -> Result<Group> {
    if order < 2 || order % 2 != 0 || order > TABLE_CAP {
        return Err(Error::CapExceeded {
            what: "dihedral group",
            size: order,
            cap: TABLE_CAP,
        });
    }
    let m = order / 2;
    let idx = |rot: usize, refl: bool| if refl { m + rot } else { rot };
    let mut mul = vec![0u16; order * order];
    for i in 0..order {
        let (ri, fi) = (i % m, i >= m);
        for j in 0..order {
            let (rj, fj) = (j % m, j >= m);
            // r^a s^e * r^b s^f = r^(a +- b) s^(e xor f)
            let rot = if fi { (ri + m - rj) % m } else { (ri + rj) % m };
            mul[i * order + j] = idx(rot, fi ^ fj) as u16;
        }
    }
    GroupTable::from_flat(mul, order, &format!("D{order}"))
}

/// Generalized quaternion group of order `4n >= 8`: elements `a^i` on
/// `0..2n` and `a^i b` on `2n..4n`, with `b^2 = a^n` and `b a b^-1 = a^-1`.
pub fn quaternion(order: usize) -> Result<Group> {
    if order < 8 || order % 4 != 0 || order > TABLE_CAP {
        return Err(Error::CapExceeded {
            what: "generalized quaternion group",
            size: order,
            cap: TABLE_CAP,
        });
    }
    let half = order / 2; // the cyclic part <a> has order 2n = half*... a has order 2n
    let n = order / 4;
    let mut mul = vec![0u16; order * order];
    for i in 0..order {
        let (ai, bi) = (i % half, i >= half);
        for j in 0..order {
            let (aj, bj) = (j % half, j >= half);
            let (rot, refl) = match (bi, bj) {
                (false, false) => ((ai + aj) % half, false),
                (false, true) => ((ai + aj) % half, true),
                (true, false) => ((ai + half - aj) % half, true),
                (true, true) => ((ai + half - aj + n) % half, false),
            };
            mul[i * order + j] = (if refl { half + rot } else { rot }) as u16;
        }
    }
    GroupTable::from_flat(mul, order, &format!("Q{order}"))
}

/// Symmetric group on `n` points; elements are the permutations of
/// `0..n` in lexicographic order, composed right-to-left.
pub fn symmetric(n: usize) -> Result<Group> {
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (0..=p.len()).map(move |at| {
                    let mut q = p.clone();
                    q.insert(at, q.len());
                    q
                })
            })
            .collect();
    }
    let order: usize = perms.len();
    if order > TABLE_CAP {
        return Err(Error::CapExceeded {
            what: "symmetric group",
            size: order,
            cap: TABLE_CAP,
        });
    }
    perms.sort_unstable();
    let idx_of = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    let mut mul = vec![0u16; order * order];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
            mul[i * order + j] = idx_of(&composed) as u16;
        }
    }
    GroupTable::from_flat(mul, order, &format!("S{n}"))
}

/// Elementary abelian group of order `p^k`; element `x` has digits
/// `c_i = (x / p^i) % p` added componentwise mod p.
pub fn elementary_abelian(p: usize, k: u32) -> Result<Group> {
    let order = p.checked_pow(k).filter(|&o| o <= TABLE_CAP).ok_or(
        Error::CapExceeded {
            what: "elementary abelian group",
            size: usize::MAX,
            cap: TABLE_CAP,
        },
    )?;
    let mut mul = vec![0u16; order * order];
    for x in 0..order {
        for y in 0..order {
            let mut z = 0;
            let mut place = 1;
            let (mut xs, mut ys) = (x, y);
            for _ in 0..k {
                z += (xs % p + ys % p) % p * place;
                xs /= p;
                ys /= p;
                place *= p;
            }
            mul[x * order + y] = z as u16;
        }
    }
    GroupTable::from_flat(mul, order, &format!("C{p}^{k}"))
}

/// How a catalog entry is built.
#[derive(Clone, Debug, PartialEq)]
pub enum Constructor {
    Cyclic(usize),
    /// Order, not degree.
    Dihedral(usize),
    Quaternion(usize),
    Symmetric(usize),
    ElementaryAbelian(usize, u32),
    Product(Box<Constructor>, Box<Constructor>),
    /// The elementary abelian group of order `p^(rank+1)` carrying the
    /// stabilizer-breaking action used by the counterexample checks.
    ExampleAction { p: usize, rank: u32 },
    FromFile(String),
}

impl Constructor {
    /// Order computed arithmetically, without building the table.
    /// `FromFile` is unknown until parsed.
    pub fn order(&self) -> Option<usize> {
        match self {
            Constructor::Cyclic(n) | Constructor::Dihedral(n) | Constructor::Quaternion(n) => {
                Some(*n)
            }
            Constructor::Symmetric(n) => Some((1..=*n).product()),
            Constructor::ElementaryAbelian(p, k) => p.checked_pow(*k),
            Constructor::Product(a, b) => Some(a.order()? * b.order()?),
            Constructor::ExampleAction { p, rank } => p.checked_pow(rank + 1),
            Constructor::FromFile(_) => None,
        }
    }

    pub fn build(&self) -> Result<Group> {
        match self {
            Constructor::Cyclic(n) => cyclic(*n),
            Constructor::Dihedral(n) => dihedral(*n),
            Constructor::Quaternion(n) => quaternion(*n),
            Constructor::Symmetric(n) => symmetric(*n),
            Constructor::ElementaryAbelian(p, k) => elementary_abelian(*p, *k),
            Constructor::Product(a, b) => {
                let left = a.build()?;
                let right = b.build()?;
                direct_product(&left, &right)
            }
            Constructor::ExampleAction { p, rank } => {
                Ok(build_example(*p as u64, *rank as usize)?.0)
            }
            Constructor::FromFile(path) => crate::fileio::parse_cayley_file(path),
        }
    }
}

/// A named catalog entry.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub ctor: Constructor,
}

impl CatalogEntry {
    pub fn order(&self) -> Option<usize> {
        self.ctor.order()
    }

    pub fn build(&self) -> Result<Group> {
        let g = self.ctor.build()?;
        if g.name() == self.name {
            Ok(g)
        } else {
            // relabel products and file groups under the catalog name
            Ok(crate::group::GroupTable::from_flat_renamed(&g, &self.name))
        }
    }

    /// Actions stored with the entry, as `(label, action)` pairs:
    /// inversion on abelian entries, coordinate moves on elementary
    /// abelian ones, and the dedicated action of the example family.
    pub fn stored_actions(&self, g: &Group) -> Vec<(String, AutSubgroup)> {
        let mut out = Vec::new();
        if let Constructor::ExampleAction { p, rank } = &self.ctor {
            let (_, a) = build_example(*p as u64, *rank as usize).expect("entry within caps");
            // rebuilt on the same indexing; re-target the maps at g
            let members: Vec<Automorphism> = a
                .generators()
                .into_iter()
                .map(|m| {
                    Automorphism::new(g, m.image_slice().iter().map(|&v| v as usize).collect())
                        .expect("example action is an automorphism")
                })
                .collect();
            let full = AutSubgroup::from_generators(g, &members);
            let tau = members
                .iter()
                .find(|m| m.apply(1) == g.mul(1, 1))
                .expect("tau doubles a0");
            out.push(("A".to_string(), full));
            out.push((
                "tau".to_string(),
                AutSubgroup::from_generators(g, std::slice::from_ref(tau)),
            ));
            return out;
        }
        if g.is_abelian() {
            let image: Vec<usize> = g.elements().map(|x| g.inv(x)).collect();
            let inv = Automorphism::new(g, image).expect("inversion on an abelian group");
            out.push((
                "inv".to_string(),
                AutSubgroup::from_generators(g, &[inv]),
            ));
        }
        if let Constructor::ElementaryAbelian(p, k) = self.ctor {
            if k >= 2 {
                let swap: Vec<usize> = g
                    .elements()
                    .map(|x| {
                        let (c0, c1, rest) = (x % p, x / p % p, x / (p * p));
                        c1 + p * c0 + p * p * rest
                    })
                    .collect();
                out.push((
                    "swap01".to_string(),
                    AutSubgroup::from_generators(g, &[Automorphism::new(g, swap).unwrap()]),
                ));
                let invfirst: Vec<usize> = g
                    .elements()
                    .map(|x| (p - x % p) % p + x / p * p)
                    .collect();
                out.push((
                    "invfirst".to_string(),
                    AutSubgroup::from_generators(g, &[Automorphism::new(g, invfirst).unwrap()]),
                ));
            }
        }
        out
    }
}

/// The standard catalog: cyclic groups to order 64, dihedral orders to 64,
/// the two quaternion groups, symmetric groups to degree 4, elementary
/// abelian groups to order 81, the example-family truncations, and all
/// pairwise direct products of nontrivial base entries within
/// [`PRODUCT_CAP`].
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn standard() -> Self {
        let mut entries = Vec::new();
        let mut push = |name: String, ctor: Constructor| {
            entries.push(CatalogEntry { name, ctor });
        };
        for n in 1..=64 {
            push(format!("C{n}"), Constructor::Cyclic(n));
        }
        for order in (4..=64).step_by(2) {
            push(format!("D{order}"), Constructor::Dihedral(order));
        }
        push("Q8".into(), Constructor::Quaternion(8));
        push("Q16".into(), Constructor::Quaternion(16));
        for n in 1..=4 {
            push(format!("S{n}"), Constructor::Symmetric(n));
        }
        for (p, ks) in [(2usize, 2..=6u32), (3, 2..=4), (5, 2..=2), (7, 2..=2)] {
            for k in ks {
                push(format!("C{p}^{k}"), Constructor::ElementaryAbelian(p, k));
            }
        }
        for (p, rank) in [(3usize, 1u32), (3, 2), (5, 1), (5, 2)] {
            push(
                format!("ex-{p}-{rank}"),
                Constructor::ExampleAction { p, rank },
            );
        }

        let base: Vec<CatalogEntry> = entries
            .iter()
            .filter(|e| {
                !matches!(e.ctor, Constructor::ExampleAction { .. })
                    && e.order().is_some_and(|o| o >= 2)
            })
            .cloned()
            .collect();
        for (i, a) in base.iter().enumerate() {
            for b in &base[i..] {
                let order = a.order().unwrap() * b.order().unwrap();
                if order <= PRODUCT_CAP {
                    entries.push(CatalogEntry {
                        name: format!("{}x{}", a.name, b.name),
                        ctor: Constructor::Product(
                            Box::new(a.ctor.clone()),
                            Box::new(b.ctor.clone()),
                        ),
                    });
                }
            }
        }
        Catalog { entries }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn find(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}
