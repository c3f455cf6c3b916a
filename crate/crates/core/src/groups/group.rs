use super::GroupError;
use std::collections::BTreeMap;
use std::sync::Arc;

pub const DEFAULT_ORDER_BOUND: usize = 256;

/// A finite group given by its multiplication table. Elements are the indices `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: BTreeMap<String, usize>,
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
        FiniteGroup::from_table_bounded(table, DEFAULT_ORDER_BOUND)
    }

    /// Validates closure, associativity, identity and inverses.
    pub fn from_table_bounded(table: Vec<Vec<usize>>, bound: usize) -> Result<FiniteGroup, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if n > bound {
            return Err(GroupError::TooLarge { order: n, bound });
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(GroupError::InvalidTable("table must be square with entries below the order".into()));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let m = |a: usize, b: usize| flat[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or_else(|| GroupError::InvalidTable("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| m(a, b) == identity && m(b, a) == identity)
                .ok_or_else(|| GroupError::InvalidTable(format!("element {} has no inverse", a)))?;
            inverse[a] = inv;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(GroupError::InvalidTable(format!("associativity fails at ({}, {}, {})", a, b, c)));
                    }
                }
            }
        }
        Ok(FiniteGroup { order: n, table: flat, identity, inverse, labels: BTreeMap::new() })
    }

    pub fn with_labels(mut self, labels: BTreeMap<String, usize>) -> Result<FiniteGroup, GroupError> {
        if let Some((k, &v)) = labels.iter().find(|(_, &v)| v >= self.order) {
            return Err(GroupError::InvalidTable(format!("label {} points at {} outside the group", k, v)));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn labels(&self) -> &BTreeMap<String, usize> {
        &self.labels
    }

    pub fn label(&self, name: &str) -> Option<usize> {
        self.labels.get(name).copied()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = self.identity;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// g·x·g⁻¹
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        use num_integer::Integer;
        self.elements().fold(1, |acc, a| acc.lcm(&self.element_order(a)))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Sorted members of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut stack = vec![self.identity];
        seen[self.identity] = true;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order).filter(|&i| seen[i]).collect()
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut covered = vec![false; self.order];
        covered[self.identity] = true;
        for x in 0..self.order {
            if !covered[x] {
                gens.push(x);
                for y in self.closure(&gens) {
                    covered[y] = true;
                }
            }
        }
        gens
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = self.elements().map(|g| self.conj(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y] = true;
            }
            out.push(class);
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Members of the commutator subgroup of the subgroup with the given members.
    pub fn derived_of(&self, members: &[usize]) -> Vec<usize> {
        let mut comms = Vec::new();
        for &a in members {
            for &b in members {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                comms.push(c);
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.closure(&comms)
    }

    pub fn is_solvable(&self) -> bool {
        let mut cur: Vec<usize> = self.elements().collect();
        loop {
            let next = self.derived_of(&cur);
            if next.len() == 1 {
                return true;
            }
            if next.len() == cur.len() {
                return false;
            }
            cur = next;
        }
    }

    /// Product of two groups, elements encoded as a·|other| + b.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order, other.order);
        let table: Vec<Vec<usize>> = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table_bounded(table, usize::MAX).expect("product of groups is a group")
    }
}

pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A subgroup of a parent group, with its own abstract group structure.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    position: Vec<Option<usize>>,
    group: Arc<FiniteGroup>,
    normal: bool,
    prime_index: Option<usize>,
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl Subgroup {
    pub fn new(parent: Arc<FiniteGroup>, members: &[usize]) -> Result<Subgroup, GroupError> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() || members.iter().any(|&m| m >= parent.order()) {
            return Err(GroupError::NotASubgroup("members must be nonempty elements of the parent".into()));
        }
        let mut position = vec![None; parent.order()];
        for (i, &m) in members.iter().enumerate() {
            position[m] = Some(i);
        }
        for &a in &members {
            for &b in &members {
                if position[parent.mul(a, b)].is_none() {
                    return Err(GroupError::NotASubgroup(format!("not closed: {}·{} leaves the set", a, b)));
                }
            }
        }
        let table: Vec<Vec<usize>> = members
            .iter()
            .map(|&a| members.iter().map(|&b| position[parent.mul(a, b)].unwrap()).collect())
            .collect();
        let group = Arc::new(FiniteGroup::from_table_bounded(table, usize::MAX)?);
        let normal = members
            .iter()
            .all(|&h| parent.elements().all(|g| position[parent.conj(g, h)].is_some()));
        let index = parent.order() / members.len();
        let prime_index = if normal && is_prime(index) { Some(index) } else { None };
        Ok(Subgroup { parent, members, position, group, normal, prime_index })
    }

    pub fn generated(parent: Arc<FiniteGroup>, gens: &[usize]) -> Result<Subgroup, GroupError> {
        if gens.iter().any(|&g| g >= parent.order()) {
            return Err(GroupError::NotASubgroup("generator outside the group".into()));
        }
        let m = parent.closure(gens);
        Subgroup::new(parent, &m)
    }

    pub fn whole(parent: Arc<FiniteGroup>) -> Subgroup {
        let all: Vec<usize> = parent.elements().collect();
        Subgroup::new(parent, &all).unwrap()
    }

    pub fn trivial(parent: Arc<FiniteGroup>) -> Subgroup {
        let e = parent.identity();
        Subgroup::new(parent, &[e]).unwrap()
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    /// The subgroup as an abstract group; its element i is `members()[i]`.
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.position.get(g).map_or(false, |p| p.is_some())
    }

    pub fn to_local(&self, g: usize) -> Option<usize> {
        self.position.get(g).copied().flatten()
    }

    pub fn to_parent(&self, local: usize) -> usize {
        self.members[local]
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    /// The prime q with parent/self cyclic of order q, when that holds.
    pub fn prime_quotient(&self) -> Option<usize> {
        self.prime_index
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        same_group(&self.parent, &other.parent) && self.members.iter().all(|&m| other.contains(m))
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup, GroupError> {
        if !same_group(&self.parent, &other.parent) {
            return Err(GroupError::MismatchedGroups);
        }
        let m: Vec<usize> = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup::new(self.parent.clone(), &m)
    }

    /// This subgroup viewed inside the abstract group of a larger subgroup.
    pub fn within(&self, outer: &Subgroup) -> Result<Subgroup, GroupError> {
        if !self.is_subset_of(outer) {
            return Err(GroupError::NotASubgroup("not contained in the outer subgroup".into()));
        }
        let local: Vec<usize> = self.members.iter().map(|&m| outer.to_local(m).unwrap()).collect();
        Subgroup::new(outer.group.clone(), &local)
    }

    /// Left coset representatives t with G = ⊔ tH, the first one the identity.
    pub fn left_transversal(&self) -> Vec<usize> {
        let g = &self.parent;
        let mut covered = vec![false; g.order()];
        let mut reps = vec![g.identity()];
        for &h in &self.members {
            covered[h] = true;
        }
        for t in g.elements() {
            if !covered[t] {
                reps.push(t);
                for &h in &self.members {
                    covered[g.mul(t, h)] = true;
                }
            }
        }
        reps
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Subgroup) -> bool {
        same_group(&self.parent, &other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}
