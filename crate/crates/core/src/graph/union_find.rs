/// Union-find with union by size and no path compression, so every union can
/// be undone from a journal. Backtracking search takes a [`checkpoint`] before
/// a batch of unions and calls [`rollback`] to restore it.
///
/// [`checkpoint`]: RollbackUnionFind::checkpoint
/// [`rollback`]: RollbackUnionFind::rollback
#[derive(Debug, Clone)]
pub struct RollbackUnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    // (attached root, previous size of the surviving root)
    journal: Vec<(usize, usize)>,
}

impl RollbackUnionFind {
    pub fn new(n: usize) -> Self {
        RollbackUnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            journal: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Merges the classes of `a` and `b`. Returns `false` (and journals
    /// nothing) when they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.journal.push((rb, self.size[ra]));
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn checkpoint(&self) -> usize {
        self.journal.len()
    }

    /// Undoes every union performed since `mark` was taken.
    pub fn rollback(&mut self, mark: usize) {
        while self.journal.len() > mark {
            let (child, old_size) = self.journal.pop().expect("journal underflow");
            let root = self.parent[child];
            self.parent[child] = child;
            self.size[root] = old_size;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rollback_restores_partition() {
        let mut uf = RollbackUnionFind::new(5);
        assert!(uf.union(0, 1));
        let mark = uf.checkpoint();
        assert!(uf.union(1, 2));
        assert!(uf.union(3, 4));
        assert!(!uf.union(0, 2));
        assert!(uf.same(0, 2));
        uf.rollback(mark);
        assert!(uf.same(0, 1));
        assert!(!uf.same(0, 2));
        assert!(!uf.same(3, 4));
        uf.rollback(0);
        assert!(!uf.same(0, 1));
        assert_eq!(uf.checkpoint(), 0);
    }

    #[test]
    fn interleaved_marks() {
        let mut uf = RollbackUnionFind::new(6);
        let m0 = uf.checkpoint();
        uf.union(0, 1);
        let m1 = uf.checkpoint();
        uf.union(2, 3);
        uf.union(1, 3);
        assert!(uf.same(0, 2));
        uf.rollback(m1);
        assert!(!uf.same(0, 2));
        assert!(uf.same(0, 1));
        uf.union(4, 5);
        uf.rollback(m0);
        for v in 0..6 {
            assert_eq!(uf.find(v), v);
        }
    }
}
