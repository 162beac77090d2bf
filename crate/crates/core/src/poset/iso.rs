//! Isomorphisms and order-reversing bijections between finite posets.
//!
//! The search assigns elements in order of depth (length of the longest chain
//! ending at the element), so the lower covers of the next element are always
//! already mapped and can be checked against the lower covers of its image.

use super::GradedPoset;

struct Shape<'a> {
    down: Vec<&'a [usize]>,
    depth: Vec<u32>,
    sig: Vec<(u32, usize, usize, usize, usize)>,
    order: Vec<usize>,
}

impl<'a> Shape<'a> {
    fn new(down: Vec<&'a [usize]>, up: Vec<&'a [usize]>, below: Vec<usize>, above: Vec<usize>) -> Shape<'a> {
        let n = down.len();
        let mut depth = vec![0u32; n];
        // Repeated relaxation terminates because the cover graph is acyclic.
        let mut changed = true;
        while changed {
            changed = false;
            for x in 0..n {
                let d = 1 + down[x].iter().map(|&z| depth[z]).max().unwrap_or(0);
                if d != depth[x] {
                    depth[x] = d;
                    changed = true;
                }
            }
        }
        let sig = (0..n).map(|x| (depth[x], down[x].len(), up[x].len(), below[x], above[x])).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (depth[x], x));
        Shape { down, depth, sig, order }
    }

    fn of(p: &'a GradedPoset) -> Shape<'a> {
        let n = p.len();
        Shape::new(
            (0..n).map(|x| p.lower_covers(x)).collect(),
            (0..n).map(|x| p.upper_covers(x)).collect(),
            (0..n).map(|x| p.principal_ideal(x).len()).collect(),
            (0..n).map(|x| p.principal_filter(x).len()).collect(),
        )
    }

    fn of_dual(p: &'a GradedPoset) -> Shape<'a> {
        let n = p.len();
        Shape::new(
            (0..n).map(|x| p.upper_covers(x)).collect(),
            (0..n).map(|x| p.lower_covers(x)).collect(),
            (0..n).map(|x| p.principal_filter(x).len()).collect(),
            (0..n).map(|x| p.principal_ideal(x).len()).collect(),
        )
    }
}

fn search<F: FnMut(&[usize]) -> bool>(a: &Shape, b: &Shape, callback: &mut F) {
    let n = a.depth.len();
    if n != b.depth.len() {
        return;
    }
    let mut sa = a.sig.clone();
    let mut sb = b.sig.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, 0, &mut map, &mut used, callback);
}

/// Returns `false` once the callback asks to stop.
fn extend<F: FnMut(&[usize]) -> bool>(
    a: &Shape,
    b: &Shape,
    pos: usize,
    map: &mut [usize],
    used: &mut [bool],
    callback: &mut F,
) -> bool {
    if pos == a.order.len() {
        return callback(map);
    }
    let x = a.order[pos];
    for y in 0..map.len() {
        if used[y] || a.sig[x] != b.sig[y] {
            continue;
        }
        let mut images: Vec<usize> = a.down[x].iter().map(|&z| map[z]).collect();
        images.sort_unstable();
        let mut target = b.down[y].to_vec();
        target.sort_unstable();
        if images != target {
            continue;
        }
        map[x] = y;
        used[y] = true;
        let keep_going = extend(a, b, pos + 1, map, used, callback);
        map[x] = usize::MAX;
        used[y] = false;
        if !keep_going {
            return false;
        }
    }
    true
}

/// Calls `callback` with every isomorphism `P → Q` (as `map[x] = f(x)`) until it
/// returns `false`.
pub fn for_each_isomorphism<F: FnMut(&[usize]) -> bool>(p: &GradedPoset, q: &GradedPoset, mut callback: F) {
    search(&Shape::of(p), &Shape::of(q), &mut callback);
}

/// Some isomorphism `P → Q`, if one exists.
pub fn are_isomorphic(p: &GradedPoset, q: &GradedPoset) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_isomorphism(p, q, |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

/// All bijections `σ` of `P` with `x ≤ y ⇔ σ(y) ≤ σ(x)`.
pub fn anti_automorphisms(p: &GradedPoset) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    search(&Shape::of(p), &Shape::of_dual(p), &mut |m: &[usize]| {
        out.push(m.to_vec());
        true
    });
    out
}

/// Order-reversing involutions of `P`.
pub fn order_reversing_involutions(p: &GradedPoset) -> Vec<Vec<usize>> {
    anti_automorphisms(p)
        .into_iter()
        .filter(|s| (0..s.len()).all(|x| s[s[x]] == x))
        .collect()
}
