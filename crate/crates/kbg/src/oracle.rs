//! Brute-force ground truth: enumerate a concrete finite group from
//! generators, partition it into conjugacy classes, and count the
//! classes of prime-power element order — independently of every
//! closed-form formula in [`crate::families`].
//!
//! Elements are compact values; the group operation lives in a
//! [`GroupLaw`] owned by the enumerated [`GroupTable`]. Wreath and
//! product elements refer to the elements of an already-enumerated
//! inner table by index, so inner groups in any representation
//! (permutations, SL(2,q) matrices, quaternions, ...) compose directly.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use num::rational::Ratio;
use num::{BigUint, Zero};
use thiserror::Error;

use crate::arith::{QuadNum, Quat};
use crate::families::spec::{ExceptionalName, GroupSpec};
use crate::families::RankProfile;

/// Default ceiling on enumerated group order.
pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("group order {needed} exceeds the enumeration cap {cap}")]
    CapExceeded { cap: u64, needed: BigUint },
    #[error("generator does not fit the group law: {0}")]
    RepresentationMismatch(String),
    #[error("{0} has no bundled concrete representation; its ranks are fixture-only")]
    FixtureOnly(ExceptionalName),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// One group element. Wreath bases and product components are indices
/// into the corresponding inner [`GroupTable`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    /// Images of 0..m-1 under the permutation.
    Perm(Box<[u8]>),
    /// Row-major 2x2 matrix over F_q with determinant 1.
    Mat2([u64; 4]),
    /// a^i x^eps in the order-4n dicyclic normal form.
    Dicyclic { i: u64, eps: bool },
    /// Unit quaternion with quadratic-field coordinates.
    Quaternion(Quat),
    /// Wreath element: inner-element index per coordinate plus the top
    /// permutation twisting the coordinates.
    Wreath { base: Box<[u32]>, top: Box<[u8]> },
    /// Direct-product element (left index, right index).
    Pair(u32, u32),
}

/// The multiplication context for one representation.
#[derive(Debug, Clone)]
pub enum GroupLaw {
    Perm { points: usize },
    Mat2 { q: u64 },
    /// ⟨a, x | a^{2n} = e, x² = aⁿ, xax⁻¹ = a⁻¹⟩.
    Dicyclic { n: u64 },
    Quaternion { d: i64 },
    Wreath { inner: Arc<GroupTable>, copies: usize },
    Pair { left: Arc<GroupTable>, right: Arc<GroupTable> },
}

fn perm_mul(p: &[u8], q: &[u8]) -> Box<[u8]> {
    q.iter().map(|&i| p[i as usize]).collect()
}

fn perm_inv(p: &[u8]) -> Box<[u8]> {
    let mut out = vec![0u8; p.len()];
    for (i, &img) in p.iter().enumerate() {
        out[img as usize] = i as u8;
    }
    out.into_boxed_slice()
}

fn perm_identity(points: usize) -> Box<[u8]> {
    (0..points as u8).collect()
}

fn perm_order(p: &[u8]) -> u64 {
    let mut seen = vec![false; p.len()];
    let mut order = 1u64;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = p[cur] as usize;
            len += 1;
        }
        order = num::integer::lcm(order, len);
    }
    order
}

impl GroupLaw {
    pub fn identity(&self) -> GroupElement {
        match self {
            GroupLaw::Perm { points } => GroupElement::Perm(perm_identity(*points)),
            GroupLaw::Mat2 { .. } => GroupElement::Mat2([1, 0, 0, 1]),
            GroupLaw::Dicyclic { .. } => GroupElement::Dicyclic { i: 0, eps: false },
            GroupLaw::Quaternion { d } => GroupElement::Quaternion(Quat::identity(*d)),
            GroupLaw::Wreath { inner, copies } => GroupElement::Wreath {
                base: vec![inner.identity_index(); *copies].into_boxed_slice(),
                top: perm_identity(*copies),
            },
            GroupLaw::Pair { left, right } => {
                GroupElement::Pair(left.identity_index(), right.identity_index())
            }
        }
    }

    /// Group product. Callers guarantee both operands belong to this law
    /// (enumeration validates generators up front).
    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (GroupLaw::Perm { .. }, GroupElement::Perm(p), GroupElement::Perm(q)) => {
                GroupElement::Perm(perm_mul(p, q))
            }
            (GroupLaw::Mat2 { q }, GroupElement::Mat2(m), GroupElement::Mat2(n)) => {
                let mul = |x: u64, y: u64| (x * y) % q;
                GroupElement::Mat2([
                    (mul(m[0], n[0]) + mul(m[1], n[2])) % q,
                    (mul(m[0], n[1]) + mul(m[1], n[3])) % q,
                    (mul(m[2], n[0]) + mul(m[3], n[2])) % q,
                    (mul(m[2], n[1]) + mul(m[3], n[3])) % q,
                ])
            }
            (
                GroupLaw::Dicyclic { n },
                GroupElement::Dicyclic { i, eps: e1 },
                GroupElement::Dicyclic { i: j, eps: e2 },
            ) => {
                let m = 2 * n;
                if !e1 {
                    GroupElement::Dicyclic { i: (i + j) % m, eps: *e2 }
                } else if !e2 {
                    GroupElement::Dicyclic { i: (i + m - j % m) % m, eps: true }
                } else {
                    GroupElement::Dicyclic { i: (i + m - j % m + n) % m, eps: false }
                }
            }
            (GroupLaw::Quaternion { .. }, GroupElement::Quaternion(p), GroupElement::Quaternion(q)) => {
                GroupElement::Quaternion(p.mul(q).expect("same field"))
            }
            (
                GroupLaw::Wreath { inner, copies },
                GroupElement::Wreath { base: g, top: s },
                GroupElement::Wreath { base: h, top: t },
            ) => {
                let n = *copies;
                let sinv = perm_inv(s);
                let base: Box<[u32]> = (0..n)
                    .map(|i| inner.mul_index(g[i], h[sinv[i] as usize]))
                    .collect();
                GroupElement::Wreath { base, top: perm_mul(s, t) }
            }
            (GroupLaw::Pair { left, right }, GroupElement::Pair(a1, a2), GroupElement::Pair(b1, b2)) => {
                GroupElement::Pair(left.mul_index(*a1, *b1), right.mul_index(*a2, *b2))
            }
            _ => unreachable!("element does not match law"),
        }
    }

    pub fn inv(&self, a: &GroupElement) -> GroupElement {
        match (self, a) {
            (GroupLaw::Perm { .. }, GroupElement::Perm(p)) => GroupElement::Perm(perm_inv(p)),
            (GroupLaw::Mat2 { q }, GroupElement::Mat2(m)) => GroupElement::Mat2([
                m[3] % q,
                (q - m[1] % q) % q,
                (q - m[2] % q) % q,
                m[0] % q,
            ]),
            (GroupLaw::Dicyclic { n }, GroupElement::Dicyclic { i, eps }) => {
                let m = 2 * n;
                if !eps {
                    GroupElement::Dicyclic { i: (m - i % m) % m, eps: false }
                } else {
                    GroupElement::Dicyclic { i: (i + n) % m, eps: true }
                }
            }
            (GroupLaw::Quaternion { .. }, GroupElement::Quaternion(p)) => {
                GroupElement::Quaternion(p.conjugate())
            }
            (GroupLaw::Wreath { inner, copies }, GroupElement::Wreath { base, top }) => {
                let n = *copies;
                let base: Box<[u32]> = (0..n)
                    .map(|i| inner.inv_index(base[top[i] as usize]))
                    .collect();
                GroupElement::Wreath { base, top: perm_inv(top) }
            }
            (GroupLaw::Pair { left, right }, GroupElement::Pair(a1, a2)) => {
                GroupElement::Pair(left.inv_index(*a1), right.inv_index(*a2))
            }
            _ => unreachable!("element does not match law"),
        }
    }

    /// Least k ≥ 1 with g^k = identity.
    pub fn element_order(&self, g: &GroupElement) -> u64 {
        match (self, g) {
            (GroupLaw::Perm { .. }, GroupElement::Perm(p)) => perm_order(p),
            (GroupLaw::Dicyclic { n }, GroupElement::Dicyclic { i, eps }) => {
                if *eps {
                    4
                } else if *i == 0 {
                    1
                } else {
                    let m = 2 * n;
                    m / num::integer::gcd(*i, m)
                }
            }
            (GroupLaw::Wreath { inner, copies }, GroupElement::Wreath { base, top }) => {
                // per top-cycle: order = cycle length * order of the
                // product of the base entries along the cycle. The k-th
                // power collects base entries along the backward orbit,
                // so accumulate by left multiplication while walking
                // forward (a cyclic rotation of the same product).
                let n = *copies;
                let mut seen = vec![false; n];
                let mut order = 1u64;
                for start in 0..n {
                    if seen[start] {
                        continue;
                    }
                    let mut len = 0u64;
                    let mut prod = inner.identity_index();
                    let mut cur = start;
                    while !seen[cur] {
                        seen[cur] = true;
                        prod = inner.mul_index(base[cur], prod);
                        cur = top[cur] as usize;
                        len += 1;
                    }
                    let inner_ord = inner.law.element_order(&inner.elements[prod as usize]);
                    order = num::integer::lcm(order, len * inner_ord);
                }
                order
            }
            (GroupLaw::Pair { left, right }, GroupElement::Pair(a, b)) => num::integer::lcm(
                left.law.element_order(&left.elements[*a as usize]),
                right.law.element_order(&right.elements[*b as usize]),
            ),
            _ => {
                // small orders only (matrix and quaternion groups)
                let e = self.identity();
                let mut h = self.mul(&e, g);
                let mut k = 1u64;
                while h != e {
                    h = self.mul(&h, g);
                    k += 1;
                }
                k
            }
        }
    }

    /// Checks that an element structurally belongs to this law.
    fn validate(&self, g: &GroupElement) -> Result<(), OracleError> {
        let fail = |msg: String| Err(OracleError::RepresentationMismatch(msg));
        match (self, g) {
            (GroupLaw::Perm { points }, GroupElement::Perm(p)) => {
                if p.len() != *points {
                    return fail(format!("permutation on {} points, law has {}", p.len(), points));
                }
                let mut seen = vec![false; *points];
                for &i in p.iter() {
                    if (i as usize) >= *points || seen[i as usize] {
                        return fail("permutation images are not a bijection".into());
                    }
                    seen[i as usize] = true;
                }
                Ok(())
            }
            (GroupLaw::Mat2 { q }, GroupElement::Mat2(m)) => {
                if m.iter().any(|&x| x >= *q) {
                    return fail(format!("matrix entries must be reduced mod {}", q));
                }
                let det = (m[0] * m[3] % q + q - m[1] * m[2] % q) % q;
                if det != 1 {
                    return fail(format!("determinant {} != 1 in F_{}", det, q));
                }
                Ok(())
            }
            (GroupLaw::Dicyclic { n }, GroupElement::Dicyclic { i, .. }) => {
                if *i >= 2 * n {
                    return fail(format!("residue {} out of range mod {}", i, 2 * n));
                }
                Ok(())
            }
            (GroupLaw::Quaternion { d }, GroupElement::Quaternion(q)) => {
                match q.field() {
                    Ok(f) if f == *d => {}
                    _ => return fail("quaternion field mismatch".into()),
                }
                if !q.is_unit() {
                    return fail("quaternion is not a unit".into());
                }
                Ok(())
            }
            (GroupLaw::Wreath { inner, copies }, GroupElement::Wreath { base, top }) => {
                if base.len() != *copies || top.len() != *copies {
                    return fail("wreath element arity mismatch".into());
                }
                if base.iter().any(|&b| b as usize >= inner.order()) {
                    return fail("wreath base index out of range".into());
                }
                GroupLaw::Perm { points: *copies }.validate(&GroupElement::Perm(top.clone()))
            }
            (GroupLaw::Pair { left, right }, GroupElement::Pair(a, b)) => {
                if *a as usize >= left.order() || *b as usize >= right.order() {
                    return fail("product component index out of range".into());
                }
                Ok(())
            }
            _ => fail("element variant does not match the group law".into()),
        }
    }
}

/// Fully enumerated finite group.
#[derive(Debug)]
pub struct GroupTable {
    law: GroupLaw,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, u32>,
    generators: Vec<u32>,
    inv_table: Vec<u32>,
    /// Dense multiplication table, built for small groups so wreath and
    /// product laws can compose inner elements without hashing.
    mul_table: Option<Vec<u32>>,
}

const MUL_TABLE_LIMIT: usize = 1024;

impl GroupTable {
    pub fn law(&self) -> &GroupLaw {
        &self.law
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> impl Iterator<Item = &GroupElement> {
        self.generators.iter().map(|&i| &self.elements[i as usize])
    }

    pub fn identity_index(&self) -> u32 {
        0
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<u32> {
        self.index.get(g).copied()
    }

    pub fn mul_index(&self, a: u32, b: u32) -> u32 {
        if let Some(t) = &self.mul_table {
            t[a as usize * self.elements.len() + b as usize]
        } else {
            let prod = self.law.mul(&self.elements[a as usize], &self.elements[b as usize]);
            self.index[&prod]
        }
    }

    pub fn inv_index(&self, a: u32) -> u32 {
        self.inv_table[a as usize]
    }

    pub fn element_order(&self, g: &GroupElement) -> u64 {
        self.law.element_order(g)
    }
}

/// Breadth-first closure of the generators under multiplication. The
/// identity sits at index 0 and element order is the deterministic BFS
/// discovery order.
pub fn enumerate_group(
    law: GroupLaw,
    generators: Vec<GroupElement>,
    cap: u64,
) -> Result<GroupTable, OracleError> {
    for g in &generators {
        law.validate(g)?;
    }
    let identity = law.identity();
    let mut index: HashMap<GroupElement, u32> = HashMap::new();
    let mut elements: Vec<GroupElement> = Vec::new();
    let mut queue: VecDeque<u32> = VecDeque::new();
    index.insert(identity.clone(), 0);
    elements.push(identity);
    queue.push_back(0);
    while let Some(ix) = queue.pop_front() {
        for gen in &generators {
            let prod = law.mul(&elements[ix as usize], gen);
            if !index.contains_key(&prod) {
                if elements.len() as u64 >= cap {
                    return Err(OracleError::CapExceeded {
                        cap,
                        needed: BigUint::from(elements.len() as u64 + 1),
                    });
                }
                let new_ix = elements.len() as u32;
                index.insert(prod.clone(), new_ix);
                elements.push(prod);
                queue.push_back(new_ix);
            }
        }
    }
    let generators: Vec<u32> = generators.iter().map(|g| index[g]).collect();
    let inv_table: Vec<u32> = elements.iter().map(|g| index[&law.inv(g)]).collect();
    let mul_table = if elements.len() <= MUL_TABLE_LIMIT {
        let n = elements.len();
        let mut t = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                t[a * n + b] = index[&law.mul(&elements[a], &elements[b])];
            }
        }
        Some(t)
    } else {
        None
    };
    Ok(GroupTable { law, elements, index, generators, inv_table, mul_table })
}

/// One conjugacy class: least-BFS-index representative, class size, and
/// the common element order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: GroupElement,
    pub size: u64,
    pub element_order: u64,
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect() }
    }

    fn find(&mut self, mut a: u32) -> u32 {
        while self.parent[a as usize] != a {
            let gp = self.parent[self.parent[a as usize] as usize];
            self.parent[a as usize] = gp;
            a = gp;
        }
        a
    }

    fn union(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        // keep the smaller index as root so representatives are
        // deterministic
        match ra.cmp(&rb) {
            std::cmp::Ordering::Less => self.parent[rb as usize] = ra,
            std::cmp::Ordering::Greater => self.parent[ra as usize] = rb,
            std::cmp::Ordering::Equal => {}
        }
    }
}

/// Conjugacy classes as connected components of the graph with edges
/// g → s·g·s⁻¹ over the generators s. Classes come out ordered by their
/// representative's BFS index; sizes always sum to |G|.
pub fn conjugacy_classes(table: &GroupTable) -> Vec<ConjClass> {
    let n = table.order();
    let mut uf = UnionFind::new(n);
    let gens: Vec<(GroupElement, GroupElement)> = table
        .generators()
        .map(|g| (g.clone(), table.law.inv(g)))
        .collect();
    for ix in 0..n {
        for (s, sinv) in &gens {
            let conj = table.law.mul(&table.law.mul(s, &table.elements[ix]), sinv);
            let jx = table.index[&conj];
            uf.union(ix as u32, jx);
        }
    }
    let mut sizes: HashMap<u32, u64> = HashMap::new();
    for ix in 0..n {
        *sizes.entry(uf.find(ix as u32)).or_insert(0) += 1;
    }
    let mut roots: Vec<u32> = sizes.keys().copied().collect();
    roots.sort_unstable();
    roots
        .into_iter()
        .map(|root| {
            let rep = &table.elements[root as usize];
            ConjClass {
                representative: rep.clone(),
                size: sizes[&root],
                element_order: table.law.element_order(rep),
            }
        })
        .collect()
}

fn is_prime_power_of(order: u64, p: u64) -> bool {
    if order < 2 {
        return false;
    }
    let mut o = order;
    while o % p == 0 {
        o /= p;
    }
    o == 1
}

/// Count, for each prime, the conjugacy classes whose element order is
/// p^d with d ≥ 1; the computable content of K⁰(BG) by enumeration.
pub fn rank_profile_bruteforce(table: &GroupTable, primes: &[u64]) -> RankProfile {
    let classes = conjugacy_classes(table);
    rank_profile_from_classes(&classes, primes, table.order() as u64, String::new())
}

pub(crate) fn rank_profile_from_classes(
    classes: &[ConjClass],
    primes: &[u64],
    order: u64,
    group: String,
) -> RankProfile {
    let mut ranks = std::collections::BTreeMap::new();
    for &p in primes {
        let count = classes
            .iter()
            .filter(|c| is_prime_power_of(c.element_order, p))
            .count();
        let count = BigUint::from(count);
        if !count.is_zero() {
            ranks.insert(p, count);
        }
    }
    RankProfile {
        group,
        order: Some(BigUint::from(order)),
        ranks,
        total_classes: Some(classes.len() as u64),
    }
}

// ---------------------------------------------------------------------------
// Realizing group specs as concrete generator sets.

fn transposition(i: usize, points: usize) -> GroupElement {
    let mut p = perm_identity(points).into_vec();
    p.swap(i, i + 1);
    GroupElement::Perm(p.into_boxed_slice())
}

fn three_cycle(i: usize, points: usize) -> GroupElement {
    // (i, i+1, i+2)
    let mut p = perm_identity(points).into_vec();
    let tmp = p[i];
    p[i] = p[i + 1];
    p[i + 1] = p[i + 2];
    p[i + 2] = tmp;
    GroupElement::Perm(p.into_boxed_slice())
}

fn rotation(points: usize) -> GroupElement {
    GroupElement::Perm((0..points).map(|i| ((i + 1) % points) as u8).collect())
}

fn cyclic_table(order: u64, cap: u64) -> Result<GroupTable, OracleError> {
    if order == 0 {
        return Err(OracleError::InvalidParameter("cyclic group of order 0".into()));
    }
    if order > 255 {
        return Err(OracleError::InvalidParameter(format!(
            "cyclic group of order {} exceeds the 255-point permutation representation",
            order
        )));
    }
    let points = order as usize;
    let gens = if points == 1 { vec![GroupElement::Perm(perm_identity(1))] } else { vec![rotation(points)] };
    enumerate_group(GroupLaw::Perm { points }, gens, cap)
}

fn symmetric_generators(n: usize) -> (GroupLaw, Vec<GroupElement>) {
    let points = n.max(1);
    let law = GroupLaw::Perm { points };
    let gens = if n >= 2 {
        (0..n - 1).map(|i| transposition(i, points)).collect()
    } else {
        vec![GroupElement::Perm(perm_identity(points))]
    };
    (law, gens)
}

fn alternating_generators(n: usize) -> (GroupLaw, Vec<GroupElement>) {
    let law = GroupLaw::Perm { points: n };
    let gens = (0..n - 2).map(|i| three_cycle(i, n)).collect();
    (law, gens)
}

fn wreath_law_and_top_gens(
    inner: Arc<GroupTable>,
    copies: usize,
) -> (GroupLaw, Vec<GroupElement>) {
    let id_base: Box<[u32]> = vec![inner.identity_index(); copies].into_boxed_slice();
    let mut gens = Vec::new();
    for i in 0..copies.saturating_sub(1) {
        let GroupElement::Perm(t) = transposition(i, copies) else { unreachable!() };
        gens.push(GroupElement::Wreath { base: id_base.clone(), top: t });
    }
    (GroupLaw::Wreath { inner, copies }, gens)
}

fn wreath_table(inner: GroupTable, copies: usize, cap: u64) -> Result<GroupTable, OracleError> {
    let inner = Arc::new(inner);
    let (law, mut gens) = wreath_law_and_top_gens(inner.clone(), copies);
    let id_top = perm_identity(copies);
    for g in inner.generators.clone() {
        let mut base = vec![inner.identity_index(); copies];
        base[0] = g;
        gens.push(GroupElement::Wreath { base: base.into_boxed_slice(), top: id_top.clone() });
    }
    enumerate_group(law, gens, cap)
}

/// Signed permutations: Z_2 ≀ S_n with sign flips in the base.
fn weyl_b_table(n: usize, cap: u64) -> Result<GroupTable, OracleError> {
    if n == 0 {
        return enumerate_group(GroupLaw::Perm { points: 1 }, vec![GroupElement::Perm(perm_identity(1))], cap);
    }
    let inner = cyclic_table(2, cap)?;
    wreath_table(inner, n, cap)
}

/// Even-sign subgroup of the signed permutations: generated by the
/// type-A transpositions plus the reflection that swaps the first two
/// coordinates and flips both signs.
fn weyl_d_table(n: usize, cap: u64) -> Result<GroupTable, OracleError> {
    let inner = Arc::new(cyclic_table(2, cap)?);
    let flip = 1u32; // index of the nontrivial element of Z_2
    let (law, mut gens) = wreath_law_and_top_gens(inner.clone(), n);
    let GroupElement::Perm(t) = transposition(0, n) else { unreachable!() };
    let mut base = vec![inner.identity_index(); n];
    base[0] = flip;
    base[1] = flip;
    gens.push(GroupElement::Wreath { base: base.into_boxed_slice(), top: t });
    enumerate_group(law, gens, cap)
}

fn sl2_generators(q: u64) -> (GroupLaw, Vec<GroupElement>) {
    (
        GroupLaw::Mat2 { q },
        vec![
            GroupElement::Mat2([1, 1, 0, 1]),
            GroupElement::Mat2([0, q - 1, 1, 0]),
        ],
    )
}

fn half() -> Ratio<i64> {
    Ratio::new(1, 2)
}

/// Generators of the binary octahedral group: the order-8 rotation
/// (1+i)/√2 and the Hurwitz unit (1+i+j+k)/2.
pub fn binary_octahedral_generators() -> Vec<GroupElement> {
    let zero = QuadNum::zero(2);
    let s2h = QuadNum::new(Ratio::zero(), half(), 2).expect("d=2");
    let h = QuadNum::new(half(), Ratio::zero(), 2).expect("d=2");
    vec![
        GroupElement::Quaternion(Quat { w: s2h, x: s2h, y: zero, z: zero }),
        GroupElement::Quaternion(Quat { w: h, x: h, y: h, z: h }),
    ]
}

/// Generators of the binary icosahedral group over ℚ(√5): the Hurwitz
/// unit (1+i+j+k)/2 and (φ + φ⁻¹i + j)/2 with φ the golden ratio.
pub fn binary_icosahedral_generators() -> Vec<GroupElement> {
    let quarter = Ratio::new(1i64, 4);
    let zero = QuadNum::zero(5);
    let h = QuadNum::new(half(), Ratio::zero(), 5).expect("d=5");
    let phi_half = QuadNum::new(quarter, quarter, 5).expect("d=5");
    let phi_inv_half = QuadNum::new(-quarter, quarter, 5).expect("d=5");
    vec![
        GroupElement::Quaternion(Quat { w: h, x: h, y: h, z: h }),
        GroupElement::Quaternion(Quat { w: phi_half, x: phi_inv_half, y: h, z: zero }),
    ]
}

/// The 24 short roots of F₄ with coordinates scaled by 2 (so everything
/// stays integral), sorted for a deterministic point order.
fn f4_short_roots() -> Vec<[i64; 4]> {
    let mut roots = Vec::new();
    for i in 0..4 {
        for s in [2i64, -2] {
            let mut v = [0i64; 4];
            v[i] = s;
            roots.push(v);
        }
    }
    for mask in 0..16u32 {
        let mut v = [1i64; 4];
        for (i, c) in v.iter_mut().enumerate() {
            if mask & (1 << i) != 0 {
                *c = -1;
            }
        }
        roots.push(v);
    }
    roots.sort_unstable();
    roots
}

/// W(F₄) as permutations of its 24 short roots: the images of the four
/// simple reflections are computed with exact integer arithmetic.
fn weyl_f4_generators() -> (GroupLaw, Vec<GroupElement>) {
    let roots = f4_short_roots();
    let index: HashMap<[i64; 4], usize> =
        roots.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    // simple roots (scaled by 2): e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2
    let simple: [[i64; 4]; 4] = [[0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 0, 2], [1, -1, -1, -1]];
    let reflect = |v: &[i64; 4], a: &[i64; 4]| -> [i64; 4] {
        let va: i64 = v.iter().zip(a).map(|(x, y)| x * y).sum();
        let aa: i64 = a.iter().map(|x| x * x).sum();
        debug_assert_eq!((2 * va) % aa, 0, "Cartan integer must be integral");
        let c = 2 * va / aa;
        let mut out = *v;
        for (o, &ai) in out.iter_mut().zip(a) {
            *o -= c * ai;
        }
        out
    };
    let gens = simple
        .iter()
        .map(|a| {
            GroupElement::Perm(
                roots
                    .iter()
                    .map(|r| index[&reflect(r, a)] as u8)
                    .collect(),
            )
        })
        .collect();
    (GroupLaw::Perm { points: 24 }, gens)
}

/// Build the concrete group for a spec and enumerate it. The predicted
/// order is checked against the cap before any element is produced.
pub fn realize(spec: &GroupSpec, cap: u64) -> Result<GroupTable, OracleError> {
    if let GroupSpec::Exceptional(name) = spec {
        if name.fixture_only() {
            return Err(OracleError::FixtureOnly(*name));
        }
    }
    let needed = spec.order();
    if needed > BigUint::from(cap) {
        return Err(OracleError::CapExceeded { cap, needed });
    }
    match spec {
        GroupSpec::Cyclic(k) => cyclic_table(*k, cap),
        GroupSpec::BinaryCyclic(k) => cyclic_table(2 * k, cap),
        GroupSpec::BinaryDihedral(n) => {
            if *n == 0 {
                return Err(OracleError::InvalidParameter("dic:0".into()));
            }
            enumerate_group(
                GroupLaw::Dicyclic { n: *n },
                vec![
                    GroupElement::Dicyclic { i: 1, eps: false },
                    GroupElement::Dicyclic { i: 0, eps: true },
                ],
                cap,
            )
        }
        GroupSpec::Symmetric(n) => {
            let (law, gens) = symmetric_generators(*n as usize);
            enumerate_group(law, gens, cap)
        }
        GroupSpec::WeylB(n) => weyl_b_table(*n as usize, cap),
        GroupSpec::WeylD(n) => weyl_d_table(*n as usize, cap),
        GroupSpec::SL2(q) => {
            let (law, gens) = sl2_generators(*q);
            enumerate_group(law, gens, cap)
        }
        GroupSpec::Wreath(inner, n) => {
            if *n == 0 {
                return enumerate_group(
                    GroupLaw::Perm { points: 1 },
                    vec![GroupElement::Perm(perm_identity(1))],
                    cap,
                );
            }
            let inner = realize(inner, cap)?;
            wreath_table(inner, *n as usize, cap)
        }
        GroupSpec::Product(a, b) => {
            let left = Arc::new(realize(a, cap)?);
            let right = Arc::new(realize(b, cap)?);
            let mut gens: Vec<GroupElement> = left
                .generators
                .iter()
                .map(|&g| GroupElement::Pair(g, right.identity_index()))
                .collect();
            gens.extend(
                right
                    .generators
                    .iter()
                    .map(|&g| GroupElement::Pair(left.identity_index(), g)),
            );
            enumerate_group(GroupLaw::Pair { left, right }, gens, cap)
        }
        GroupSpec::Exceptional(name) => realize_exceptional(*name, cap),
    }
}

fn realize_exceptional(name: ExceptionalName, cap: u64) -> Result<GroupTable, OracleError> {
    match name {
        ExceptionalName::A4 => {
            let (law, gens) = alternating_generators(4);
            enumerate_group(law, gens, cap)
        }
        ExceptionalName::A5 => {
            let (law, gens) = alternating_generators(5);
            enumerate_group(law, gens, cap)
        }
        ExceptionalName::S4 => realize(&GroupSpec::Symmetric(4), cap),
        ExceptionalName::S5 => realize(&GroupSpec::Symmetric(5), cap),
        ExceptionalName::BinT => realize(&GroupSpec::SL2(3), cap),
        ExceptionalName::BinI => realize(&GroupSpec::SL2(5), cap),
        ExceptionalName::BinO => {
            enumerate_group(GroupLaw::Quaternion { d: 2 }, binary_octahedral_generators(), cap)
        }
        ExceptionalName::WD4 => weyl_d_table(4, cap),
        ExceptionalName::WG2 => {
            // dihedral symmetries of the hexagon: rotation plus the
            // reflection fixing vertices 0 and 3
            let refl = GroupElement::Perm(vec![0u8, 5, 4, 3, 2, 1].into_boxed_slice());
            enumerate_group(GroupLaw::Perm { points: 6 }, vec![rotation(6), refl], cap)
        }
        ExceptionalName::WF4 => {
            let (law, gens) = weyl_f4_generators();
            enumerate_group(law, gens, cap)
        }
        ExceptionalName::H3 => {
            // H3 is the product of the icosahedral rotation group with
            // the central reflection: A5 x Z2
            let (law, gens) = alternating_generators(5);
            let left = Arc::new(enumerate_group(law, gens, cap)?);
            let right = Arc::new(cyclic_table(2, cap)?);
            let mut pgens: Vec<GroupElement> = left
                .generators
                .iter()
                .map(|&g| GroupElement::Pair(g, right.identity_index()))
                .collect();
            pgens.push(GroupElement::Pair(left.identity_index(), 1));
            enumerate_group(GroupLaw::Pair { left, right }, pgens, cap)
        }
        ExceptionalName::WE6 | ExceptionalName::WE7 | ExceptionalName::WE8 | ExceptionalName::H4 => {
            Err(OracleError::FixtureOnly(name))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn profile(spec: &str, primes: &[u64]) -> (RankProfile, usize) {
        let table = realize(&spec.parse().unwrap(), DEFAULT_CAP).unwrap();
        let order = table.order();
        (rank_profile_bruteforce(&table, primes), order)
    }

    #[test]
    fn enumerate_small_groups() {
        let (_, order) = profile("sl2:3", &[2, 3]);
        assert_eq!(order, 24);
        let table = realize(&"dic:2".parse().unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(table.order(), 8);
        let bino = enumerate_group(
            GroupLaw::Quaternion { d: 2 },
            binary_octahedral_generators(),
            DEFAULT_CAP,
        )
        .unwrap();
        assert_eq!(bino.order(), 48);
    }

    #[test]
    fn quaternion_group_classes() {
        let table = realize(&"dic:2".parse().unwrap(), DEFAULT_CAP).unwrap();
        let classes = conjugacy_classes(&table);
        let mut sizes: Vec<u64> = classes.iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        assert_eq!(classes.iter().map(|c| c.size).sum::<u64>(), 8);
    }

    #[test]
    fn s4_classes_and_trivial_group() {
        let table = realize(&"sym:4".parse().unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(conjugacy_classes(&table).len(), 5);
        let table = realize(&"sym:1".parse().unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(conjugacy_classes(&table).len(), 1);
        assert_eq!(table.order(), 1);
    }

    #[test]
    fn element_orders() {
        let dic2 = GroupLaw::Dicyclic { n: 2 };
        assert_eq!(dic2.element_order(&dic2.identity()), 1);
        assert_eq!(dic2.element_order(&GroupElement::Dicyclic { i: 0, eps: true }), 4);
        // negative 4-cycle in Z2 wr S4: base flip on one coordinate,
        // top a 4-cycle
        let inner = Arc::new(cyclic_table(2, DEFAULT_CAP).unwrap());
        let law = GroupLaw::Wreath { inner, copies: 4 };
        let g = GroupElement::Wreath {
            base: vec![1, 0, 0, 0].into_boxed_slice(),
            top: vec![1u8, 2, 3, 0].into_boxed_slice(),
        };
        assert_eq!(law.element_order(&g), 8);
    }

    #[test]
    fn wreath_order_formula_matches_iteration() {
        let inner = Arc::new(realize(&"dic:2".parse().unwrap(), DEFAULT_CAP).unwrap());
        let law = GroupLaw::Wreath { inner: inner.clone(), copies: 3 };
        let table = realize(&"wreath(dic:2,3)".parse().unwrap(), DEFAULT_CAP).unwrap();
        let e = law.identity();
        for g in table.elements().iter().step_by(17) {
            let fast = law.element_order(g);
            let mut h = g.clone();
            let mut k = 1;
            while h != e {
                h = law.mul(&h, g);
                k += 1;
            }
            assert_eq!(fast, k);
        }
    }

    #[test]
    fn bruteforce_profiles() {
        let (a4, _) = profile("exc:A4", &[2, 3]);
        assert_eq!(a4.rank(2), 1u32.into());
        assert_eq!(a4.rank(3), 2u32.into());
        let (sl25, _) = profile("sl2:5", &[2, 3, 5]);
        assert_eq!(sl25.rank(2), 2u32.into());
        assert_eq!(sl25.rank(3), 1u32.into());
        assert_eq!(sl25.rank(5), 2u32.into());
        let (q8, _) = profile("dic:2", &[2]);
        assert_eq!(q8.rank(2), 4u32.into());
        assert_eq!(q8.total_classes, Some(5));
    }

    #[test]
    fn cauchy_self_check() {
        // r(p) = 0 iff p does not divide |G|
        for spec in ["sym:5", "dic:6", "sl2:3", "exc:WG2", "wreath(cyc:3,2)"] {
            let spec: GroupSpec = spec.parse().unwrap();
            let table = realize(&spec, DEFAULT_CAP).unwrap();
            let profile = rank_profile_bruteforce(&table, &[2, 3, 5, 7, 11]);
            let order = BigUint::from(table.order() as u64);
            for p in [2u64, 3, 5, 7, 11] {
                let divides = (&order % BigUint::from(p)).is_zero();
                assert_eq!(
                    !profile.rank(p).is_zero(),
                    divides,
                    "{} at p={}",
                    spec,
                    p
                );
            }
        }
    }

    #[test]
    fn generating_set_invariance() {
        // sym:4 via adjacent transpositions vs transposition + 4-cycle
        let std = realize(&"sym:4".parse().unwrap(), DEFAULT_CAP).unwrap();
        let alt = enumerate_group(
            GroupLaw::Perm { points: 4 },
            vec![transposition(0, 4), rotation(4)],
            DEFAULT_CAP,
        )
        .unwrap();
        assert_eq!(std.order(), alt.order());
        let p1 = rank_profile_bruteforce(&std, &[2, 3]);
        let p2 = rank_profile_bruteforce(&alt, &[2, 3]);
        assert_eq!(p1.ranks, p2.ranks);
        assert_eq!(p1.total_classes, p2.total_classes);
        // dicyclic via {a, x} vs {ax, x}
        let std = realize(&"dic:3".parse().unwrap(), DEFAULT_CAP).unwrap();
        let alt = enumerate_group(
            GroupLaw::Dicyclic { n: 3 },
            vec![
                GroupElement::Dicyclic { i: 1, eps: true },
                GroupElement::Dicyclic { i: 0, eps: true },
            ],
            DEFAULT_CAP,
        )
        .unwrap();
        assert_eq!(std.order(), alt.order());
        assert_eq!(
            rank_profile_bruteforce(&std, &[2, 3]).ranks,
            rank_profile_bruteforce(&alt, &[2, 3]).ranks
        );
    }

    #[test]
    fn class_sizes_sum() {
        for spec in ["exc:WG2", "weylB:3", "weylD:3", "exc:BinO", "prod(cyc:4,sym:3)"] {
            let table = realize(&spec.parse().unwrap(), DEFAULT_CAP).unwrap();
            let classes = conjugacy_classes(&table);
            assert_eq!(
                classes.iter().map(|c| c.size).sum::<u64>(),
                table.order() as u64,
                "{}",
                spec
            );
        }
    }

    #[test]
    fn direct_product_r_tilde_multiplicative() {
        for (a, b) in [("cyc:4", "cyc:6"), ("dic:2", "cyc:3"), ("sym:3", "cyc:2")] {
            let spec: GroupSpec = format!("prod({},{})", a, b).parse().unwrap();
            let table = realize(&spec, DEFAULT_CAP).unwrap();
            let prod = rank_profile_bruteforce(&table, &[2, 3, 5]);
            let pa = rank_profile_bruteforce(&realize(&a.parse().unwrap(), DEFAULT_CAP).unwrap(), &[2, 3, 5]);
            let pb = rank_profile_bruteforce(&realize(&b.parse().unwrap(), DEFAULT_CAP).unwrap(), &[2, 3, 5]);
            for p in [2u64, 3, 5] {
                assert_eq!(
                    prod.r_tilde(p),
                    pa.r_tilde(p) * pb.r_tilde(p),
                    "{} at p={}",
                    spec,
                    p
                );
            }
        }
    }

    #[test]
    fn cap_and_errors() {
        let err = realize(&"sym:5".parse().unwrap(), 100).unwrap_err();
        assert!(matches!(err, OracleError::CapExceeded { cap: 100, .. }));
        let err = realize(&"exc:WE8".parse().unwrap(), DEFAULT_CAP).unwrap_err();
        assert!(matches!(err, OracleError::FixtureOnly(ExceptionalName::WE8)));
        let err = realize(&"exc:H4".parse().unwrap(), DEFAULT_CAP).unwrap_err();
        assert!(matches!(err, OracleError::FixtureOnly(ExceptionalName::H4)));
        // representation mismatch: a 3-point permutation under a 4-point law
        let err = enumerate_group(
            GroupLaw::Perm { points: 4 },
            vec![GroupElement::Perm(vec![1u8, 0, 2].into_boxed_slice())],
            DEFAULT_CAP,
        )
        .unwrap_err();
        assert!(matches!(err, OracleError::RepresentationMismatch(_)));
        let err = enumerate_group(
            GroupLaw::Perm { points: 3 },
            vec![GroupElement::Mat2([1, 0, 0, 1])],
            DEFAULT_CAP,
        )
        .unwrap_err();
        assert!(matches!(err, OracleError::RepresentationMismatch(_)));
    }

    #[test]
    fn icosahedral_quaternion_model_matches_sl25() {
        let quat = enumerate_group(
            GroupLaw::Quaternion { d: 5 },
            binary_icosahedral_generators(),
            DEFAULT_CAP,
        )
        .unwrap();
        assert_eq!(quat.order(), 120);
        let via_quat = rank_profile_bruteforce(&quat, &[2, 3, 5]);
        let via_mat = rank_profile_bruteforce(
            &realize(&"sl2:5".parse().unwrap(), DEFAULT_CAP).unwrap(),
            &[2, 3, 5],
        );
        assert_eq!(via_quat.ranks, via_mat.ranks);
        assert_eq!(via_quat.total_classes, via_mat.total_classes);
    }

    #[test]
    fn closed_form_crosscheck_spot() {
        // one representative of each family against the families module
        for spec in ["cyc:12", "bincyc:6", "dic:4", "sym:5", "weylB:3", "weylD:4", "wreath(cyc:2,3)"] {
            let spec: GroupSpec = spec.parse().unwrap();
            let primes = spec.support_primes();
            let table = realize(&spec, DEFAULT_CAP).unwrap();
            let oracle = rank_profile_bruteforce(&table, &primes);
            let closed = families::rank_profile(&spec, Some(&primes)).unwrap();
            assert!(closed.agrees_on(&oracle, &primes), "{}", spec);
        }
    }
}
