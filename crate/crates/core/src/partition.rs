//! Ordered partition refinement over a subset of `0..n`.

const NONE: u32 = u32::MAX;

pub type GroupId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Place {
    Before,
    After,
}

#[derive(Clone, Debug)]
struct Group {
    head: u32,
    tail: u32,
    len: usize,
    prev: u32,
    next: u32,
    split: u32,
    born: u32,
}

/// Ordered sequence of disjoint groups. Each group keeps its members in a
/// doubly linked list; refinement moves hit members, in pivot order, to a
/// fresh group adjacent to their old one.
#[derive(Clone, Debug)]
pub struct VertexPartition {
    next: Vec<u32>,
    prev: Vec<u32>,
    group_of: Vec<u32>,
    groups: Vec<Group>,
    first: u32,
    last: u32,
    size: usize,
    live_groups: usize,
    round: u32,
}

impl VertexPartition {
    pub fn new(n: usize) -> VertexPartition {
        VertexPartition {
            next: vec![NONE; n],
            prev: vec![NONE; n],
            group_of: vec![NONE; n],
            groups: Vec::new(),
            first: NONE,
            last: NONE,
            size: 0,
            live_groups: 0,
            round: 0,
        }
    }

    /// Partition with the given groups, in order.
    pub fn from_groups<I, G>(n: usize, groups: I) -> VertexPartition
    where
        I: IntoIterator<Item = G>,
        G: IntoIterator<Item = usize>,
    {
        let mut p = VertexPartition::new(n);
        for grp in groups {
            let mut id = NONE;
            for v in grp {
                assert_eq!(p.group_of[v], NONE, "vertex {v} listed twice");
                if id == NONE {
                    id = p.new_group(p.last, Place::After);
                }
                p.push_back(id, v);
            }
        }
        p
    }

    fn new_group(&mut self, anchor: u32, place: Place) -> u32 {
        let id = self.groups.len() as u32;
        let (prev, next) = match (anchor, place) {
            (NONE, _) => (NONE, NONE),
            (a, Place::Before) => (self.groups[a as usize].prev, a),
            (a, Place::After) => (a, self.groups[a as usize].next),
        };
        self.groups.push(Group {
            head: NONE,
            tail: NONE,
            len: 0,
            prev,
            next,
            split: NONE,
            born: self.round,
        });
        if prev == NONE {
            self.first = id;
        } else {
            self.groups[prev as usize].next = id;
        }
        if next == NONE {
            self.last = id;
        } else {
            self.groups[next as usize].prev = id;
        }
        self.live_groups += 1;
        id
    }

    fn drop_group(&mut self, id: u32) {
        let g = &self.groups[id as usize];
        debug_assert_eq!(g.len, 0);
        let (prev, next) = (g.prev, g.next);
        if prev == NONE {
            self.first = next;
        } else {
            self.groups[prev as usize].next = next;
        }
        if next == NONE {
            self.last = prev;
        } else {
            self.groups[next as usize].prev = prev;
        }
        self.live_groups -= 1;
    }

    fn push_back(&mut self, id: u32, v: usize) {
        let g = &mut self.groups[id as usize];
        self.prev[v] = g.tail;
        self.next[v] = NONE;
        if g.tail == NONE {
            g.head = v as u32;
        } else {
            self.next[g.tail as usize] = v as u32;
        }
        g.tail = v as u32;
        g.len += 1;
        self.group_of[v] = id;
        self.size += 1;
    }

    fn unlink(&mut self, v: usize) -> u32 {
        let id = self.group_of[v];
        let (p, nx) = (self.prev[v], self.next[v]);
        let g = &mut self.groups[id as usize];
        if p == NONE {
            g.head = nx;
        } else {
            self.next[p as usize] = nx;
        }
        if nx == NONE {
            g.tail = p;
        } else {
            self.prev[nx as usize] = p;
        }
        g.len -= 1;
        self.group_of[v] = NONE;
        self.size -= 1;
        id
    }

    /// Removes `v`; empty groups disappear.
    pub fn remove(&mut self, v: usize) {
        if self.group_of[v] == NONE {
            return;
        }
        let id = self.unlink(v);
        if self.groups[id as usize].len == 0 {
            self.drop_group(id);
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.group_of[v] != NONE
    }

    pub fn group_of(&self, v: usize) -> Option<GroupId> {
        match self.group_of[v] {
            NONE => None,
            g => Some(g),
        }
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn num_groups(&self) -> usize {
        self.live_groups
    }

    pub fn first_group(&self) -> Option<GroupId> {
        (self.first != NONE).then_some(self.first)
    }

    pub fn next_group(&self, id: GroupId) -> Option<GroupId> {
        let nx = self.groups[id as usize].next;
        (nx != NONE).then_some(nx)
    }

    pub fn head(&self, id: GroupId) -> usize {
        self.groups[id as usize].head as usize
    }

    pub fn group_len(&self, id: GroupId) -> usize {
        self.groups[id as usize].len
    }

    pub fn members(&self, id: GroupId) -> impl Iterator<Item = usize> + '_ {
        let mut cur = self.groups[id as usize].head;
        std::iter::from_fn(move || {
            if cur == NONE {
                return None;
            }
            let v = cur as usize;
            cur = self.next[v];
            Some(v)
        })
    }

    pub fn group_ids(&self) -> Vec<GroupId> {
        let mut out = Vec::with_capacity(self.live_groups);
        let mut cur = self.first;
        while cur != NONE {
            out.push(cur);
            cur = self.groups[cur as usize].next;
        }
        out
    }

    pub fn groups(&self) -> Vec<Vec<usize>> {
        self.group_ids().into_iter().map(|g| self.members(g).collect()).collect()
    }

    /// Splits every group X (other than `skip`) into X \ pivot and
    /// X ∩ pivot; the hit part goes immediately before or after the rest.
    /// Returns `(old, new)` for each group that ended up split in two.
    pub fn refine<I>(&mut self, pivot: I, place: Place, skip: Option<GroupId>) -> Vec<(GroupId, GroupId)>
    where
        I: IntoIterator<Item = usize>,
    {
        self.round = self.round.wrapping_add(1);
        let round = self.round;
        let mut touched: Vec<u32> = Vec::new();
        for v in pivot {
            let id = self.group_of[v];
            if id == NONE || Some(id) == skip || self.groups[id as usize].born == round {
                continue;
            }
            let mut split = self.groups[id as usize].split;
            if split == NONE {
                split = self.new_group(id, place);
                self.groups[id as usize].split = split;
                touched.push(id);
            }
            self.unlink(v);
            self.push_back(split, v);
        }
        let mut out = Vec::new();
        for id in touched {
            let split = self.groups[id as usize].split;
            self.groups[id as usize].split = NONE;
            if self.groups[id as usize].len == 0 {
                self.drop_group(id);
            } else {
                out.push((id, split));
            }
        }
        out
    }
}
