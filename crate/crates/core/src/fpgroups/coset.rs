//! Bounded Todd-Coxeter coset enumeration over the trivial subgroup, HLT
//! strategy with row filling and full coincidence processing. Deterministic
//! for a fixed presentation and limit; exhausting the coset budget yields an
//! explicit inconclusive result, never a claim about the group.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::fmt;

use super::word::Presentation;

/// Outcome of an enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EnumResult {
    /// The table closed; the group order equals the number of live cosets.
    Finite { order: usize },
    /// The coset budget ran out before the table closed.
    Inconclusive { cosets_used: usize, limit: usize },
}

impl fmt::Display for EnumResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumResult::Finite { order } => write!(f, "finite({order})"),
            EnumResult::Inconclusive { cosets_used, limit } => {
                write!(f, "inconclusive({cosets_used} cosets, limit {limit})")
            }
        }
    }
}

const UNDEF: u32 = u32::MAX;

struct Table {
    ncols: usize,
    rows: Vec<u32>,
    /// Union-find representative pointers for coincidence handling.
    parent: Vec<u32>,
    limit: usize,
}

impl Table {
    fn new(ngens: usize, limit: usize) -> Table {
        let ncols = 2 * ngens;
        let mut t = Table { ncols, rows: Vec::new(), parent: Vec::new(), limit };
        t.alloc();
        t
    }

    fn alloc(&mut self) -> Option<u32> {
        if self.parent.len() >= self.limit {
            return None;
        }
        let id = self.parent.len() as u32;
        self.parent.push(id);
        self.rows.extend(core::iter::repeat(UNDEF).take(self.ncols));
        Some(id)
    }

    fn rep(&mut self, mut c: u32) -> u32 {
        while self.parent[c as usize] != c {
            let up = self.parent[self.parent[c as usize] as usize];
            self.parent[c as usize] = up;
            c = up;
        }
        c
    }

    fn get(&self, c: u32, col: usize) -> u32 {
        self.rows[c as usize * self.ncols + col]
    }

    fn put(&mut self, c: u32, col: usize, v: u32) {
        self.rows[c as usize * self.ncols + col] = v;
    }

    fn live_count(&mut self) -> usize {
        (0..self.parent.len() as u32).filter(|&c| self.parent[c as usize] == c).count()
    }
}

fn inv(col: usize) -> usize {
    col ^ 1
}

fn col_of(gen: usize, inverse: bool) -> usize {
    2 * gen + usize::from(inverse)
}

/// Records alpha * col = beta (and the inverse entry), queueing a
/// coincidence if either slot already holds a different coset.
fn set_entry(t: &mut Table, pending: &mut VecDeque<(u32, u32)>, alpha: u32, col: usize, beta: u32) {
    let a = t.rep(alpha);
    let b = t.rep(beta);
    let cur = t.get(a, col);
    if cur != UNDEF {
        let cur = t.rep(cur);
        if cur != b {
            pending.push_back((cur, b));
        }
        return;
    }
    t.put(a, col, b);
    let back = t.get(b, inv(col));
    if back != UNDEF {
        let back = t.rep(back);
        if back != a {
            pending.push_back((back, a));
        }
    } else {
        t.put(b, inv(col), a);
    }
}

/// Merges queued coincidences until none remain, moving the dead coset's
/// table entries onto the surviving representative.
fn process_coincidences(t: &mut Table, pending: &mut VecDeque<(u32, u32)>) {
    while let Some((x, y)) = pending.pop_front() {
        let x = t.rep(x);
        let y = t.rep(y);
        if x == y {
            continue;
        }
        let (keep, dead) = if x < y { (x, y) } else { (y, x) };
        t.parent[dead as usize] = keep;
        for col in 0..t.ncols {
            let target = t.get(dead, col);
            if target == UNDEF {
                continue;
            }
            t.put(dead, col, UNDEF);
            let target = t.rep(target);
            // Unhook the back-reference from the dead row before remapping.
            if t.get(target, inv(col)) != UNDEF && t.rep(t.get(target, inv(col))) == dead {
                t.put(target, inv(col), UNDEF);
            }
            let keep = t.rep(keep);
            let existing = t.get(keep, col);
            if existing != UNDEF {
                let existing = t.rep(existing);
                if existing != target {
                    pending.push_back((existing, target));
                }
            } else {
                t.put(keep, col, target);
                let back = t.get(target, inv(col));
                if back == UNDEF {
                    t.put(target, inv(col), keep);
                } else {
                    let back = t.rep(back);
                    if back != keep {
                        pending.push_back((back, keep));
                    }
                }
            }
        }
    }
}

/// Scans relator `letters` from `alpha`, filling every gap with fresh
/// cosets (HLT). Returns false when the coset budget is exhausted.
fn scan_and_fill(
    t: &mut Table,
    pending: &mut VecDeque<(u32, u32)>,
    alpha: u32,
    letters: &[usize],
) -> bool {
    let mut start = t.rep(alpha);
    let mut i = 0usize;
    let mut end = start;
    let mut j = letters.len();
    // Forward as far as defined.
    while i < j {
        let next = t.get(start, letters[i]);
        if next == UNDEF {
            break;
        }
        start = t.rep(next);
        i += 1;
    }
    if i == j {
        if start != t.rep(alpha) {
            pending.push_back((start, t.rep(alpha)));
        }
        return true;
    }
    // Backward as far as defined.
    while j > i + 1 {
        let prev = t.get(end, inv(letters[j - 1]));
        if prev == UNDEF {
            break;
        }
        end = t.rep(prev);
        j -= 1;
    }
    // Fill the remaining gap with definitions; the last step closes the loop.
    while i < j - 1 {
        let Some(fresh) = t.alloc() else { return false };
        set_entry(t, pending, start, letters[i], fresh);
        start = t.rep(fresh);
        i += 1;
    }
    set_entry(t, pending, start, letters[i], end);
    true
}

/// Enumerates cosets of the trivial subgroup in the presented group, with at
/// most `max_cosets` cosets ever allocated.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> EnumResult {
    let ngens = p.generators().len();
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .filter(|w| !w.is_empty())
        .map(|w| w.letters().map(|(g, inverse)| col_of(g, inverse)).collect())
        .collect();

    let mut t = Table::new(ngens, max_cosets.max(1));
    let mut pending: VecDeque<(u32, u32)> = VecDeque::new();

    loop {
        let mut alpha = 0u32;
        let mut out_of_space = false;
        'sweep: while (alpha as usize) < t.parent.len() {
            if t.rep(alpha) != alpha {
                alpha += 1;
                continue;
            }
            for rel in &relators {
                if !scan_and_fill(&mut t, &mut pending, alpha, rel) {
                    out_of_space = true;
                    break 'sweep;
                }
                process_coincidences(&mut t, &mut pending);
                if t.rep(alpha) != alpha {
                    // This coset died during processing; move on.
                    alpha += 1;
                    continue 'sweep;
                }
            }
            for col in 0..t.ncols {
                if t.get(alpha, col) == UNDEF {
                    let Some(fresh) = t.alloc() else {
                        out_of_space = true;
                        break 'sweep;
                    };
                    set_entry(&mut t, &mut pending, alpha, col, fresh);
                    process_coincidences(&mut t, &mut pending);
                }
                if t.rep(alpha) != alpha {
                    alpha += 1;
                    continue 'sweep;
                }
            }
            alpha += 1;
        }
        if out_of_space {
            return EnumResult::Inconclusive { cosets_used: t.parent.len(), limit: max_cosets };
        }
        // The table is complete on live cosets. Verify every relator traces
        // a closed loop; any mismatch queues a coincidence and we resweep.
        let mut consistent = true;
        for alpha in 0..t.parent.len() as u32 {
            if t.rep(alpha) != alpha {
                continue;
            }
            for rel in &relators {
                let mut c = alpha;
                let mut closed = true;
                for &col in rel {
                    let next = t.get(c, col);
                    if next == UNDEF {
                        closed = false;
                        break;
                    }
                    c = t.rep(next);
                }
                if !closed || c != alpha {
                    consistent = false;
                    if closed {
                        pending.push_back((c, alpha));
                        process_coincidences(&mut t, &mut pending);
                    }
                }
            }
        }
        if consistent {
            return EnumResult::Finite { order: t.live_count() };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroups::parse::parse_presentation;

    fn run(text: &str, limit: usize) -> EnumResult {
        todd_coxeter(&parse_presentation(text).unwrap(), limit)
    }

    #[test]
    fn cyclic_three() {
        assert_eq!(run("gens: a ; rels: a^3", 100), EnumResult::Finite { order: 3 });
    }

    #[test]
    fn both_generators_killed() {
        assert_eq!(run("gens: a b ; rels: a, b", 100), EnumResult::Finite { order: 1 });
    }

    #[test]
    fn cyclic_groups_up_to_twelve() {
        for m in 1..=12 {
            let text = alloc::format!("gens: a ; rels: a^{m}");
            assert_eq!(run(&text, 500), EnumResult::Finite { order: m as usize }, "m = {m}");
        }
    }

    #[test]
    fn symmetric_group_s3() {
        assert_eq!(
            run("gens: a b ; rels: a^2, b^3, (a b)^2", 200),
            EnumResult::Finite { order: 6 }
        );
    }

    #[test]
    fn quaternion_group() {
        // <a, b | a^4, a^2 b^-2, b^-1 a b a>
        assert_eq!(
            run("gens: a b ; rels: a^4, a^2 b^-2, b^-1 a b a", 400),
            EnumResult::Finite { order: 8 }
        );
    }

    #[test]
    fn von_dyck_2_3_4_has_order_24() {
        assert_eq!(
            run("gens: a b ; rels: a^2, b^3, (a b)^4", 600),
            EnumResult::Finite { order: 24 }
        );
    }

    #[test]
    fn free_group_is_inconclusive() {
        match run("gens: a b ; rels: a^0", 50) {
            EnumResult::Inconclusive { cosets_used, limit } => {
                assert_eq!(limit, 50);
                assert!(cosets_used >= 50);
            }
            other => panic!("expected inconclusive, got {other}"),
        }
    }

    #[test]
    fn infinite_cyclic_is_inconclusive() {
        assert!(matches!(
            run("gens: a b ; rels: b", 64),
            EnumResult::Inconclusive { .. }
        ));
    }

    #[test]
    fn deterministic_across_runs() {
        let p = parse_presentation("gens: a b ; rels: a^2, b^3, (a b)^7").unwrap();
        let first = todd_coxeter(&p, 300);
        for _ in 0..3 {
            assert_eq!(todd_coxeter(&p, 300), first);
        }
        // (2,3,7) is infinite, so the bounded run must be inconclusive.
        assert!(matches!(first, EnumResult::Inconclusive { .. }));
    }

    #[test]
    fn perfect_presentation_of_asl2_5() {
        // <a, b | a^2 = b^3 = (ab)^5 = 1> has order 60 and trivial H1.
        assert_eq!(
            run("gens: a b ; rels: a^2, b^3, (a b)^5", 2000),
            EnumResult::Finite { order: 60 }
        );
    }
}
