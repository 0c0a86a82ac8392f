use knotbook::constructions::{composite_cycle, extension_family, insert_vertex, stable_cycle, step_cycle};
use knotbook::verify::{cycle_diagram, first_hamiltonian};
use knotbook::{Cycle, Identifier, KnotName};

fn name(c: &Cycle) -> KnotName {
    Identifier::default().identify(&cycle_diagram(c).unwrap())
}

#[test]
fn step_cycles_are_torus_knots() {
    assert_eq!(name(&step_cycle(7, 2).unwrap()), KnotName::Trefoil);
    assert_eq!(name(&step_cycle(9, 2).unwrap()), KnotName::K5_1);
    assert_eq!(name(&step_cycle(11, 2).unwrap()), KnotName::K7_1);
    assert_eq!(name(&step_cycle(10, 3).unwrap()), KnotName::K8_19);
    assert_eq!(name(&step_cycle(11, 3).unwrap()), KnotName::K10_124);
    assert!(step_cycle(8, 2).is_err());
}

#[test]
fn composites_of_census_knots() {
    let id = Identifier::default();
    let trefoil = Cycle::new(7, vec![1, 3, 5, 7, 2, 4, 6]).unwrap();
    let figure_eight = first_hamiltonian(9, KnotName::FigureEight, &id).unwrap();
    let sum = composite_cycle(&trefoil, &trefoil).unwrap();
    assert_eq!(sum.n(), 15);
    assert!(sum.is_hamiltonian());
    assert_eq!(name(&sum), KnotName::TrefoilSum);
    let mixed = composite_cycle(&trefoil, &figure_eight).unwrap();
    assert_eq!(mixed.n(), 17);
    let f = knotbook::invariants::fingerprint(&cycle_diagram(&mixed).unwrap(), 24).unwrap();
    assert_eq!(f.determinant, 3 * 5);
}

#[test]
fn extension_keeps_knot_type() {
    let figure_eight = first_hamiltonian(9, KnotName::FigureEight, &Identifier::default()).unwrap();
    assert_eq!(name(&stable_cycle(&figure_eight, 12).unwrap()), KnotName::FigureEight);
    let family = extension_family(&figure_eight, 9, 1).unwrap();
    assert!(family.len() >= 2 * 10);
    assert!(family.iter().all(|c| name(c) == KnotName::FigureEight));
    let trefoil = Cycle::new(8, vec![1, 3, 5, 7, 2, 4, 6]).unwrap();
    assert_eq!(name(&insert_vertex(&trefoil, 7).unwrap()), KnotName::Trefoil);
}
