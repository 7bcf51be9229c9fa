//! Bundled fixtures.

/// A named curve, optionally paired with a second curve for Jacobian runs.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub f: &'static str,
    pub g: Option<&'static str>,
    pub note: &'static str,
}

const Q1: &str = "(y^2-x^3)^2-x^5*y";
const Q2: &str = "(y^2-x^3)^2+x^5*y";

pub const QUARTIC_PAIR: &str = "((y^2-x^3)^2-x^5*y)*((y^2-x^3)^2+x^5*y)";
pub const FOUR_QUARTICS: &str =
    "((y^2-x^3)^2-x^5*y)*((y^2-x^3)^2+x^5*y)*((y^2-x^3)^2+x^5*y-x^7)*((y^2+x^3)^2-x^5*y)";
pub const QUARTIC_CUSPS: &str = "((y^2-x^3)^2-x^5*y)*(y^2-x^3)*(y^2+x^3)";
pub const OCTIC_PAIR: &str =
    "(((y^2-x^3)^2-x^5*y)^2+x^10*(y^2-x^3))*(((y^2+x^3)^2-x^5*y)^2+x^22*(y^2+x^3))";
/// Second factor with x^11, the reading under which Γ(f_2) = ⟨8,12,26,57⟩.
pub const OCTIC_PAIR_X11: &str =
    "(((y^2-x^3)^2-x^5*y)^2+x^10*(y^2-x^3))*(((y^2+x^3)^2-x^5*y)^2+x^11*(y^2+x^3))";
pub const MEROMORPHIC: &str = "y^4+x^-1*y^2+y+1";

pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture { name: "quartic-pair", f: QUARTIC_PAIR, g: None, note: "two equivalent quartic branches" },
        Fixture { name: "four-quartics", f: FOUR_QUARTICS, g: None, note: "four quartic branches" },
        Fixture { name: "quartic-cusps", f: QUARTIC_CUSPS, g: None, note: "quartic and two cusps" },
        Fixture { name: "octic-pair", f: OCTIC_PAIR, g: None, note: "two octic branches, x^22 as printed" },
        Fixture { name: "octic-pair-x11", f: OCTIC_PAIR_X11, g: None, note: "two octic branches, x^11" },
        Fixture { name: "meromorphic", f: MEROMORPHIC, g: None, note: "one bad and one good point" },
        Fixture { name: "cusp", f: "y^2-x^3", g: None, note: "" },
        Fixture { name: "smooth", f: "y-x^2", g: None, note: "" },
        Fixture { name: "quartic", f: Q1, g: None, note: "irreducible, h = 2" },
        Fixture { name: "cusp-line", f: "(y^2-x^3)*(y-x^2)", g: None, note: "almost equivalent pair" },
        Fixture { name: "three-lines", f: "(y-x)*(y-2*x)*(y+x)", g: None, note: "" },
        Fixture { name: "tacnode", f: "(y-x^2)*(y+x^2)", g: None, note: "" },
        Fixture { name: "cusps-2-3", f: "(y^2-x^3)*(y^2-2*x^3)*(y^3-x^5)", g: None, note: "" },
        Fixture { name: "e8", f: "y^3-x^5", g: None, note: "" },
        Fixture { name: "jac-quartic-y", f: Q1, g: Some("y"), note: "irreducible f, smooth g" },
        Fixture { name: "jac-cusp-line", f: "y^2-x^3", g: Some("y-x"), note: "" },
        Fixture { name: "jac-two-cusps", f: "y^2-x^3", g: Some("y^2-2*x^3"), note: "" },
        Fixture { name: "jac-quartic-pair", f: Q1, g: Some(Q2), note: "" },
    ]
}

pub fn find(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}
