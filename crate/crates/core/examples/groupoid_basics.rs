// Build a groupoid, inspect units, isotropy and orbits, and round-trip it
// through the JSON file format.

use steinberg::constructions::{disjoint_union, pair_groupoid, transitive, FiniteGroup};
use steinberg::FiniteGroupoid;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Two objects with isotropy S₃, next to a three-object pair groupoid.
    let g = disjoint_union(&[transitive(2, &FiniteGroup::dihedral(3)), pair_groupoid(3)]);
    println!("{} elements, {} units", g.len(), g.units().len());

    for class in g.orbit_classes() {
        let x = class.representative;
        let iso = g.isotropy(x)?;
        let names: Vec<&str> = class.members.iter().map(|&u| g.name(u)).collect();
        println!("orbit of {}: {:?}, isotropy order {}", g.name(x), names, iso.order());
        for &y in &class.members {
            assert_eq!(g.transporter(y, x).len(), iso.order());
        }
    }
    println!("principal: {}", g.is_principal());

    let text = g.to_json();
    let back = FiniteGroupoid::from_json(&text)?;
    assert_eq!(back.to_json(), text);
    println!("JSON round trip: {} bytes", text.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
