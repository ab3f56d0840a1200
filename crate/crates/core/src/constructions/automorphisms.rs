use super::ConstructionError;
use crate::tables::{Element, Permutation, QuasigroupTable};

/// Default largest group order accepted by [`enumerate_automorphisms`].
pub const DEFAULT_AUTOMORPHISM_BOUND: usize = 12;

pub fn enumerate_automorphisms(g: &QuasigroupTable) -> Result<Vec<Permutation>, ConstructionError> {
    enumerate_automorphisms_bounded(g, DEFAULT_AUTOMORPHISM_BOUND)
}

/// All automorphisms of the group `g`, sorted by image sequence.
///
/// Candidates are generated by choosing images for a greedily found generating
/// set (each image must have the same element order as its generator) and
/// extending multiplicatively; full homomorphism checks follow.
pub fn enumerate_automorphisms_bounded(
    g: &QuasigroupTable,
    bound: usize,
) -> Result<Vec<Permutation>, ConstructionError> {
    let n = g.order();
    if n > bound {
        return Err(ConstructionError::BoundExceeded { order: n, bound });
    }
    let e = group_identity(g)?;
    let gens = generating_set(g, e);
    let orders: Vec<usize> = (0..n).map(|x| element_order(g, e, x)).collect();

    let mut found = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    search(g, e, &gens, &orders, &mut images, &mut found);
    found.sort();
    found.dedup();
    Ok(found)
}

pub(crate) fn group_identity(g: &QuasigroupTable) -> Result<Element, ConstructionError> {
    match g.identity_element() {
        Some(e) if g.is_associative() => Ok(e),
        _ => Err(ConstructionError::NotAGroup),
    }
}

fn element_order(g: &QuasigroupTable, e: Element, x: Element) -> usize {
    let mut k = 1;
    let mut y = x;
    while y != e {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

fn closure(g: &QuasigroupTable, e: Element, gens: &[Element]) -> Vec<bool> {
    let mut member = vec![false; g.order()];
    member[e] = true;
    let mut queue = vec![e];
    while let Some(x) = queue.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if !member[y] {
                member[y] = true;
                queue.push(y);
            }
        }
    }
    member
}

fn generating_set(g: &QuasigroupTable, e: Element) -> Vec<Element> {
    let mut gens = Vec::new();
    let mut member = closure(g, e, &gens);
    for x in 0..g.order() {
        if !member[x] {
            gens.push(x);
            member = closure(g, e, &gens);
        }
    }
    gens
}

fn search(
    g: &QuasigroupTable,
    e: Element,
    gens: &[Element],
    orders: &[usize],
    images: &mut Vec<Element>,
    found: &mut Vec<Permutation>,
) {
    if images.len() == gens.len() {
        if let Some(f) = extend(g, e, gens, images) {
            found.push(f);
        }
        return;
    }
    let target = orders[gens[images.len()]];
    for y in 0..g.order() {
        if orders[y] == target && !images.contains(&y) {
            images.push(y);
            search(g, e, gens, orders, images, found);
            images.pop();
        }
    }
}

/// Extends generator images to a map by `f(x·s) = f(x)·f(s)`; returns it if
/// it is a well-defined bijective homomorphism.
fn extend(g: &QuasigroupTable, e: Element, gens: &[Element], images: &[Element]) -> Option<Permutation> {
    let n = g.order();
    let mut f: Vec<Option<Element>> = vec![None; n];
    f[e] = Some(e);
    let mut queue = vec![e];
    while let Some(x) = queue.pop() {
        let fx = f[x].unwrap();
        for (&s, &fs) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = g.mul(fx, fs);
            match f[y] {
                None => {
                    f[y] = Some(fy);
                    queue.push(y);
                }
                Some(prev) if prev != fy => return None,
                Some(_) => {}
            }
        }
    }
    let perm = Permutation::new(f.into_iter().map(Option::unwrap).collect())?;
    g.is_automorphism(&perm).then_some(perm)
}
