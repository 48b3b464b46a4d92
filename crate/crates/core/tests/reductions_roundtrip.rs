use flood_core::dp::solve_proper_interval;
use flood_core::mpq::solve_interval;
use flood_core::reductions::{vc_bruteforce, vc_to_caterpillar, vc_to_proper_interval, VcInstance};
use flood_core::{verify_solution, Variant};

fn sources() -> Vec<(&'static str, VcInstance)> {
    let g = |n, e: &[(usize, usize)]| VcInstance::new(n, e.to_vec()).unwrap();
    vec![
        ("P3", g(3, &[(0, 1), (1, 2)])),
        ("K3", g(3, &[(0, 1), (1, 2), (0, 2)])),
        ("P4", g(4, &[(0, 1), (1, 2), (2, 3)])),
        ("star", g(4, &[(0, 1), (0, 2), (0, 3)])),
        ("paw", g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])),
        ("C4", g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])),
    ]
}

#[test]
fn proper_interval_roundtrip() {
    for (name, vc) in sources() {
        let (rep, cert) = vc_to_proper_interval(&vc).unwrap();
        let g = rep.to_graph().unwrap();
        let tau = vc_bruteforce(&vc).unwrap().tau;
        let sol = solve_proper_interval(&g).unwrap();
        assert_eq!(sol.opt, cert.offset + tau, "{name}");
        let v = verify_solution(&g, Variant::Free, &sol.witness);
        assert!(v.valid && v.length == sol.opt);
    }
}

/// The claimed identity holds on these sources.
#[test]
fn caterpillar_roundtrip() {
    let mut all = sources()[..2].to_vec();
    all.push(("edge", VcInstance::new(2, vec![(0, 1)]).unwrap()));
    for (name, vc) in all {
        let (g, cert) = vc_to_caterpillar(&vc).unwrap();
        let tau = vc_bruteforce(&vc).unwrap().tau;
        let sol = solve_interval(&g).unwrap();
        assert_eq!(sol.opt, cert.offset + tau, "{name}");
        let v = verify_solution(&g, Variant::Free, &sol.witness);
        assert!(v.valid && v.length == sol.opt);
    }
}

/// On a 4-cycle the caterpillar admits a verified witness shorter than the
/// claimed optimum, so the forward direction is only an upper bound.
#[test]
fn caterpillar_claim_is_an_upper_bound() {
    for (name, vc) in sources() {
        let (g, cert) = vc_to_caterpillar(&vc).unwrap();
        let tau = vc_bruteforce(&vc).unwrap().tau;
        let sol = solve_interval(&g).unwrap();
        assert!(sol.opt <= cert.offset + tau, "{name}");
        let v = verify_solution(&g, Variant::Free, &sol.witness);
        assert!(v.valid && v.length == sol.opt, "{name}");
    }
    let (name, c4) = sources().pop().unwrap();
    assert_eq!(name, "C4");
    let (g, cert) = vc_to_caterpillar(&c4).unwrap();
    assert!(solve_interval(&g).unwrap().opt < cert.offset + 2);
}
