//! Reference modules used by tests and the command-line tool.
//!
//! Each fixture is built from generator matrices by peeling: the action of
//! an arbitrary element is reconstructed recursively from the generator
//! actions through the projective relation, and the result is fully
//! verified before being returned.

use crate::cocycles::{tilde_phi, CocycleData, CocycleSpec};
use crate::groups::{Elem, GroupSpec};
use crate::linalg::ExactMatrix;
use crate::scalars::CycScalar;
use crate::yd::{Component, YDModule};

/// Build a single-component module from generator action matrices: the
/// action of x = e_l + x′ (l the first nonzero coordinate) is
/// Φ̃_g(e_l, x′)⁻¹·ρ(e_l)·ρ(x′).  Panics unless the result verifies.
pub fn module_from_generator_actions(
    cocycle: CocycleData,
    n_ctx: u32,
    degree: Elem,
    gen_actions: Vec<ExactMatrix>,
) -> YDModule {
    let group = cocycle.group().clone();
    assert_eq!(gen_actions.len(), group.rank(), "one matrix per cyclic factor");
    let dim = gen_actions[0].rows();
    for m in &gen_actions {
        assert_eq!((m.rows(), m.cols()), (dim, dim), "generator actions must be square");
        assert_eq!(m.root_order(), n_ctx, "generator actions must share the scalar field");
    }
    let n = cocycle.root_order();
    assert_eq!(n_ctx % n, 0, "scalar field must absorb the cocycle root order");
    let factor = (n_ctx / n) as i64;
    let tp = tilde_phi(&cocycle, &degree);
    let size = group.size() as usize;
    let elems = group.elems();
    let mut action: Vec<ExactMatrix> = Vec::with_capacity(size);
    action.push(ExactMatrix::identity(n_ctx, dim));
    for idx in 1..size {
        let x = &elems[idx];
        let l = x.iter().position(|&v| v != 0).unwrap();
        let mut rest = x.clone();
        rest[l] -= 1;
        let gen = group.generator(l);
        let rest_idx = group.index_of(&rest);
        assert!(rest_idx < idx, "peeling must consume previously built actions");
        let phase =
            CycScalar::root_of_unity(n_ctx, -factor * tp.eval_exp(&gen, &rest));
        action.push(gen_actions[l].mul(&action[rest_idx]).scale(&phase));
    }
    let module = YDModule {
        group,
        cocycle,
        n_ctx,
        components: vec![Component { degree, action }],
    };
    if let Err(e) = module.verify() {
        panic!("fixture failed verification: {}", e);
    }
    module
}

fn triple_class_cocycle(orders: Vec<u32>, c: u32) -> CocycleData {
    let g = GroupSpec::new(orders);
    let mut s = CocycleSpec::trivial(g);
    s.c_triple.insert((0, 1, 2), c);
    CocycleData::Rep(s)
}

fn mat(n: u32, rows: &[&[i64]]) -> ExactMatrix {
    ExactMatrix::from_ints(n, rows)
}

fn root_mat(n: u32, entries: &[&[Option<i64>]]) -> ExactMatrix {
    // Entries are root-of-unity exponents at order n; `None` is zero.
    let dim = entries.len();
    let mut m = ExactMatrix::zero(n, dim, entries[0].len());
    for (i, row) in entries.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if let Some(k) = e {
                *m.at_mut(i, j) = CycScalar::root_of_unity(n, *k);
            }
        }
    }
    m
}

/// Rank-three elementary 2-group, nontrivial triple-index class, module of
/// dimension two concentrated in the first generator degree.
pub fn order2_cube_module() -> YDModule {
    let data = triple_class_cocycle(vec![2, 2, 2], 1);
    let degree = data.group().generator(0);
    let gens = vec![
        mat(2, &[&[-1, 0], &[0, -1]]),
        mat(2, &[&[1, 0], &[0, -1]]),
        mat(2, &[&[0, 1], &[1, 0]]),
    ];
    module_from_generator_actions(data, 2, degree, gens)
}

/// Companion module concentrated in the second generator degree.
pub fn order2_cube_module_deg2() -> YDModule {
    let data = triple_class_cocycle(vec![2, 2, 2], 1);
    let degree = data.group().generator(1);
    let gens = vec![
        mat(2, &[&[1, 0], &[0, -1]]),
        mat(2, &[&[-1, 0], &[0, -1]]),
        mat(2, &[&[0, 1], &[1, 0]]),
    ];
    module_from_generator_actions(data, 2, degree, gens)
}

/// Companion module concentrated in the third generator degree.
pub fn order2_cube_module_deg3() -> YDModule {
    let data = triple_class_cocycle(vec![2, 2, 2], 1);
    let degree = data.group().generator(2);
    let gens = vec![
        mat(2, &[&[0, 1], &[1, 0]]),
        mat(2, &[&[1, 0], &[0, -1]]),
        mat(2, &[&[-1, 0], &[0, -1]]),
    ];
    module_from_generator_actions(data, 2, degree, gens)
}

/// Rank-three group of exponent six with the order-two triple-index class,
/// module of dimension two in the first generator degree; scalars involve
/// both second and third roots of unity.
pub fn order6_cube_module() -> YDModule {
    let data = triple_class_cocycle(vec![6, 6, 6], 3);
    let degree = data.group().generator(0);
    let gens = vec![
        // ζ₃·I
        root_mat(6, &[&[Some(2), None], &[None, Some(2)]]),
        // diag(ζ₃, −ζ₃)
        root_mat(6, &[&[Some(2), None], &[None, Some(5)]]),
        // the swap
        root_mat(6, &[&[None, Some(0)], &[Some(0), None]]),
    ];
    module_from_generator_actions(data, 6, degree, gens)
}

/// Registry of named fixture modules for the command-line tool.
pub fn named_modules() -> Vec<(&'static str, YDModule)> {
    vec![
        ("order2-cube", order2_cube_module()),
        ("order2-cube-deg2", order2_cube_module_deg2()),
        ("order2-cube-deg3", order2_cube_module_deg3()),
        ("order6-cube", order6_cube_module()),
    ]
}
