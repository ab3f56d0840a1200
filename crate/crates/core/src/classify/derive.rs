use crate::terms::{Identity, LoopIdentity, LoopTerm, Term};

/// The quasigroup identity derived from a loop identity: every `s+t` becomes
/// `(s'/a)*(b\t')` for two fresh variables, normally `u1` and `v`.
pub fn derive_identity(loop_identity: &LoopIdentity) -> Identity {
    let used = loop_identity.variables();
    let a = fresh("u", 1, &used);
    let b = fresh("v", 0, &used);
    let (a, b) = (Term::var(a), Term::var(b));
    let lhs = translate(&loop_identity.lhs, &a, &b);
    let rhs = translate(&loop_identity.rhs, &a, &b);
    Identity::new(lhs, rhs)
}

/// `base` followed by the first free index from `start` (`0` meaning no suffix).
fn fresh(base: &str, start: usize, used: &[String]) -> String {
    (start..)
        .map(|i| if i == 0 { base.to_string() } else { format!("{base}{i}") })
        .find(|name| !used.contains(name))
        .unwrap()
}

fn translate(t: &LoopTerm, a: &Term, b: &Term) -> Term {
    match t {
        LoopTerm::Var(v) => Term::var(v.clone()),
        LoopTerm::Plus(l, r) => Term::mul(
            Term::rdiv(translate(l, a, b), a.clone()),
            Term::ldiv(b.clone(), translate(r, a, b)),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::parse_loop_identity;

    fn derive(s: &str) -> String {
        derive_identity(&parse_loop_identity(s).unwrap()).to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(derive("x+y = y+x"), "(x/u1)*(v\\y) = (y/u1)*(v\\x)");
        assert_eq!(
            derive("(x+y)+z = x+(y+z)"),
            "(((x/u1)*(v\\y))/u1)*(v\\z) = (x/u1)*(v\\((y/u1)*(v\\z)))"
        );
        let moufang = derive_identity(&parse_loop_identity("(x+(y+z))+x = (x+y)+(z+x)").unwrap());
        assert_eq!(moufang.variables(), ["x", "u1", "v", "y", "z"]);
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        assert_eq!(derive("u1+v = v+u1"), "(u1/u2)*(v1\\v) = (v/u2)*(v1\\u1)");
    }
}
