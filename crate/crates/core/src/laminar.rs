//! Uncrossing tests for edge-cuts given by vertex sets.

/// Whether cuts `δ(x)` and `δ(y)` are uncrossed: in every component `C`,
/// one of `x∩C`, `C∖x` is contained in one of `y∩C`, `C∖y`.
///
/// `component[v]` labels the component of `v`; `x` and `y` are membership masks.
pub fn uncrossed(component: &[usize], x: &[bool], y: &[bool]) -> bool {
    let count = component.iter().copied().max().map_or(0, |m| m + 1);
    // per component: is (x-side or x-complement) inside (y-side or y-complement)?
    // bit i*2+j set means some vertex lies in x-part i and y-part j
    let mut seen = vec![0u8; count];
    for (v, &c) in component.iter().enumerate() {
        let i = usize::from(!x[v]);
        let j = usize::from(!y[v]);
        seen[c] |= 1 << (i * 2 + j);
    }
    seen.iter().all(|&mask| {
        // x-part i fits into y-part j iff x-part i never meets y-part 1-j
        let meets = |i: usize, j: usize| mask & (1 << (i * 2 + j)) != 0;
        (0..2).any(|i| (0..2).any(|j| !meets(i, 1 - j)))
    })
}

/// First pair of indices `(i, j)`, `i < j`, whose cuts cross.
pub fn first_crossing(component: &[usize], sides: &[Vec<bool>]) -> Option<(usize, usize)> {
    for i in 0..sides.len() {
        for j in i + 1..sides.len() {
            if !uncrossed(component, &sides[i], &sides[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_laminar(component: &[usize], sides: &[Vec<bool>]) -> bool {
    first_crossing(component, sides).is_none()
}
