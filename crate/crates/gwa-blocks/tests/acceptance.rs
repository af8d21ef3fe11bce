//! Acceptance suite: runs every criterion and prints one pass/fail line
//! each; the process exits nonzero if any criterion fails. Every tolerance
//! is exact; no floating point is involved anywhere.

use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gwa_blocks::blockcalc::{
    bgg_reciprocity_check, ext_dim, hilbert_a, hilbert_e, koszul_check, mult, skl_check, ExtDim,
    HilbertMatrix, ObjectRef,
};
use gwa_blocks::cartan::{
    discover_block, singular_degrees, Presentation, Weight, ZtildeTable,
};
use gwa_blocks::linalg::Fp;
use gwa_blocks::poly::{rat, rat_int, LPoly, QPoly, Rat};
use gwa_blocks::quiver::{dim_an, iso_check_an_phi, phi_basis, phi_basis_count_formula};
use gwa_blocks::repcat::{
    build, dualize, enumerate_submodules, ext_dim_from_resolution, hom_space, image_sum,
    is_isomorphic, min_proj_resolution, quotient_rep, socle_dims, subrep, transfer_psi,
    IsoResult, QuiverRep, SubmodulePoint,
};
use gwa_blocks::styt::{
    enumerate_extensions, enumerate_maps, manhattan_degree, parse, proj_quot_diagram, render,
    skew, verma_diagram, yt_of_psi, Styt,
};

type Q = BigRational;
type F2 = Fp<2>;

fn standard_objects(n: usize) -> Vec<ObjectRef> {
    let mut objects = vec![];
    for i in 1..=n {
        objects.push(ObjectRef::Simple(i));
    }
    for r in 1..=n {
        for s in 0..r {
            objects.push(ObjectRef::VermaQuot { r, s });
        }
    }
    for j in 1..=n {
        for k in j + 1..=n + 1 {
            objects.push(ObjectRef::ProjQuot { j, k });
        }
    }
    objects
}

fn main() {
    let criteria: &[(&str, fn() -> (bool, &'static str))] = &[
        ("1", criterion_01_algebra_dimensions),
        ("2", criterion_02_koszulity),
        ("3", criterion_03_quiver_presentation),
        ("4", criterion_04_oracle_equivalence),
        ("5", criterion_05_submodule_bijection),
        ("6", criterion_06_tilting_duality),
        ("7", criterion_07_styt_conformance),
        ("8", criterion_08_block_discovery),
        ("9", criterion_09_skl_and_reciprocity),
        ("10", criterion_10_rendering_golden),
        ("dictionary", multiplicity_dictionary_between_layers),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = std::panic::catch_unwind(run);
        let (pass, what) = match outcome {
            Ok((pass, what)) => (pass, what),
            Err(_) => (false, "criterion panicked"),
        };
        println!("criterion {name}: {} - {what}", if pass { "PASS" } else { "FAIL" });
        if !pass {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}

fn criterion_01_algebra_dimensions() -> (bool, &'static str) {
    let mut ok = true;
    for n in 1..=8usize {
        let squares: usize = (1..=n).map(|i| i * i).sum();
        ok &= dim_an(n) == squares;
        ok &= phi_basis(n).len() == phi_basis_count_formula(n);
    }
    (ok, "dim A_n = 1^2+...+n^2 and phi count = ((n+1)^5-(n+1)^3)/24, n <= 8")
}

fn criterion_02_koszulity() -> (bool, &'static str) {
    let mut ok = true;
    for n in 1..=10usize {
        ok &= koszul_check(n);
        ok &= hilbert_e(n).det().is_one();
        // The product check is exact polynomial arithmetic.
        ok &= hilbert_a(n).mul(&hilbert_e(n).negate_var()) == HilbertMatrix::identity(n);
    }
    (ok, "H(A,t) * H(E(A),-t) = I and det H(E(A),t) = 1, n <= 10")
}

fn criterion_03_quiver_presentation() -> (bool, &'static str) {
    let ok = (1..=6).all(iso_check_an_phi);
    (ok, "relations hold under phi composition and dimensions agree, n <= 6")
}

fn criterion_04_oracle_equivalence() -> (bool, &'static str) {
    let mut ok = true;
    let mut checked = 0usize;
    for n in 1..=4usize {
        let objects = standard_objects(n);
        let reps: Vec<QuiverRep<Q>> = objects.iter().map(|x| build(n, x).unwrap()).collect();
        for (xi, x) in objects.iter().enumerate() {
            // One resolution per source covers all targets and degrees.
            let res = min_proj_resolution(&reps[xi], 4);
            for (yi, y) in objects.iter().enumerate() {
                for l in 0..=2usize {
                    if let ExtDim::Dim(expect) = ext_dim(n, x, y, l).unwrap() {
                        let got = ext_dim_from_resolution(&res, &reps[yi], l);
                        if got != expect {
                            eprintln!("  mismatch: n={n} Ext^{l}({x}, {y}): oracle {got}, formula {expect}");
                            ok = false;
                        }
                        checked += 1;
                    }
                }
                // Higher vanishing: the global dimension is two.
                if ext_dim_from_resolution(&res, &reps[yi], 3) != 0 {
                    eprintln!("  nonzero Ext^3({x}, {y}) at n={n}");
                    ok = false;
                }
            }
        }
        // Ext^2(L_i, L_i) = 1 for i != 1, and 0 for i = 1.
        for i in 1..=n {
            let li: QuiverRep<Q> = build(n, &ObjectRef::Simple(i)).unwrap();
            let res = min_proj_resolution(&li, 4);
            let d = ext_dim_from_resolution(&res, &li, 2);
            ok &= d == usize::from(i != 1);
        }
    }
    (ok && checked > 1000, "oracle Ext equals every supported formula value over Q, n <= 4, l <= 2, with higher vanishing")
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Strictly decreasing sequences with entries in 1..=top, length <= maxlen.
fn decreasing_sequences(top: usize, maxlen: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..maxlen {
        let mut next = vec![];
        for seq in &frontier {
            let below = seq.last().copied().unwrap_or(top + 1);
            for m in 1..below {
                let mut t = seq.clone();
                t.push(m);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn criterion_05_submodule_bijection() -> (bool, &'static str) {
    let mut ok = true;
    for n in 1..=4usize {
        for r in 1..=n {
            for s in r + 1..=n + 1 {
                let rep: QuiverRep<F2> = build(n, &ObjectRef::ProjQuot { j: r, k: s }).unwrap();
                let subs = enumerate_submodules(&rep, 10_000_000).unwrap();
                let expect: u64 = (0..=s - r).map(|l| binomial(s - 1, l)).sum();
                if subs.len() as u64 != expect {
                    eprintln!("  count mismatch for P{r}/P{s} at n={n}: {} vs {expect}", subs.len());
                    ok = false;
                }
                // Indecomposability via the simple-socle criterion: every
                // nonzero submodule has a one-dimensional socle at vertex 1.
                for sub in &subs {
                    if sub.total_dim() == 0 {
                        continue;
                    }
                    let soc = socle_dims(&rep, sub);
                    if soc.iter().sum::<usize>() != 1 || soc[0] != 1 {
                        eprintln!("  socle criterion fails in P{r}/P{s} at n={n}");
                        ok = false;
                    }
                }
                // The transfer map is a bijection onto the valid sequences,
                // certifying the Verma flag of each submodule.
                let mut images: Vec<Vec<usize>> =
                    subs.iter().map(|s| transfer_psi(&rep, s).unwrap()).collect();
                images.sort();
                let mut valid = decreasing_sequences(s - 1, s - r);
                valid.sort();
                if images != valid {
                    eprintln!("  transfer bijection fails for P{r}/P{s} at n={n}");
                    ok = false;
                }
            }
        }
    }
    // Spot check at n = 5: P_3/P_6 has 26 submodules, by enumeration and
    // by the binomial formula.
    let rep: QuiverRep<F2> = build(5, &ObjectRef::ProjQuot { j: 3, k: 6 }).unwrap();
    let subs = enumerate_submodules(&rep, 10_000_000).unwrap();
    let formula: u64 = (0..=3).map(|l| binomial(5, l)).sum();
    ok &= subs.len() == 26 && formula == 26;
    // Field independence spot checks at n <= 3.
    for n in 1..=3usize {
        for r in 1..=n {
            for s in r + 1..=n + 1 {
                let x = ObjectRef::ProjQuot { j: r, k: s };
                let c2 = enumerate_submodules(&build::<F2>(n, &x).unwrap(), 10_000_000)
                    .unwrap()
                    .len();
                let c3 = enumerate_submodules(&build::<Fp<3>>(n, &x).unwrap(), 10_000_000)
                    .unwrap()
                    .len();
                let c5 = enumerate_submodules(&build::<Fp<5>>(n, &x).unwrap(), 10_000_000)
                    .unwrap()
                    .len();
                ok &= c2 == c3 && c3 == c5;
            }
        }
    }
    (ok, "submodule counts, socles, and transfer bijection over F2 (n <= 4; P3/P6 at n=5)")
}

fn criterion_06_tilting_duality() -> (bool, &'static str) {
    let mut ok = true;
    for n in 1..=4usize {
        for k in 1..=n {
            let t: QuiverRep<Q> = build(n, &ObjectRef::Tilting(k)).unwrap();
            if is_isomorphic(&t, &dualize(&t), 17) != IsoResult::Isomorphic {
                eprintln!("  T_{k} not self-dual at n={n}");
                ok = false;
            }
            // F(P_k) = T_n / T_{k-1}, built as the quotient of T_n by the
            // span of all maps from T_{k-1}.
            let tn: QuiverRep<Q> = build(n, &ObjectRef::ProjQuot { j: 1, k: n + 1 }).unwrap();
            let quotient = if k == 1 {
                tn.clone()
            } else {
                let tk1: QuiverRep<Q> = build(n, &ObjectRef::Tilting(k - 1)).unwrap();
                let maps = hom_space(&tk1, &tn);
                quotient_rep(&tn, &image_sum(&maps, &tn)).0
            };
            let fpk: QuiverRep<Q> =
                build(n, &ObjectRef::dual(ObjectRef::ProjQuot { j: k, k: n + 1 })).unwrap();
            if is_isomorphic(&quotient, &fpk, 17) != IsoResult::Isomorphic {
                eprintln!("  F(P_{k}) != T_{n}/T_{} at n={n}", k - 1);
                ok = false;
            }
        }
    }
    (ok, "dualize fixes every T_k and dualize(P_k) = T_n/T_(k-1), n <= 4")
}

fn tyst_atlas(n: usize) -> Vec<(ObjectRef, Styt)> {
    let mut atlas: Vec<(ObjectRef, Styt)> = vec![];
    for i in 1..=n {
        atlas.push((ObjectRef::Simple(i), verma_diagram(i, i - 1)));
    }
    for r in 1..=n {
        for s in 0..r {
            atlas.push((ObjectRef::VermaQuot { r, s }, verma_diagram(r, s)));
        }
    }
    for j in 1..=n {
        for k in j + 1..=n + 1 {
            atlas.push((ObjectRef::ProjQuot { j, k }, proj_quot_diagram(j, k)));
        }
    }
    let duals: Vec<(ObjectRef, Styt)> = atlas
        .iter()
        .map(|(o, d)| (ObjectRef::dual(o.clone()), d.transpose()))
        .collect();
    atlas.extend(duals);
    atlas
}

fn criterion_07_styt_conformance() -> (bool, &'static str) {
    let mut ok = true;
    let mut ext_defects: Vec<String> = vec![];
    for n in 1..=5usize {
        let atlas = tyst_atlas(n);
        for (ox, dx) in &atlas {
            for (oy, dy) in &atlas {
                if let ExtDim::Dim(expect) = ext_dim(n, ox, oy, 0).unwrap() {
                    let got = enumerate_maps(dx, dy).len();
                    if got != expect {
                        eprintln!("  map count mismatch: n={n} Hom({ox}, {oy}): {got} vs {expect}");
                        ok = false;
                    }
                }
                if let ExtDim::Dim(expect) = ext_dim(n, ox, oy, 1).unwrap() {
                    let got = enumerate_extensions(dx, dy).len();
                    if got != expect {
                        ext_defects.push(format!(
                            "n={n} Ext1({ox}, {oy}): juxtapositions {got}, formula {expect}"
                        ));
                    }
                }
            }
        }
        // Skew cell counts equal composition multiplicities, through the
        // transfer dictionary over actual submodules (n <= 4 for cost).
        if n <= 4 {
            let amb: QuiverRep<F2> = build(n, &ObjectRef::ProjQuot { j: 1, k: n + 1 }).unwrap();
            let subs = enumerate_submodules(&amb, 10_000_000).unwrap();
            let with_psi: Vec<(Vec<usize>, &SubmodulePoint<F2>)> = subs
                .iter()
                .map(|s| (transfer_psi(&amb, s).unwrap(), s))
                .collect();
            for (psi_n, sub_n) in &with_psi {
                for (psi_p, sub_p) in &with_psi {
                    let contained = (0..n).all(|v| {
                        sub_n.spaces[v].contains_subspace(&sub_p.spaces[v])
                    });
                    if !contained {
                        continue;
                    }
                    let Ok(diagram) = skew(psi_n, psi_p) else { continue };
                    let counts = diagram.label_counts();
                    for v in 1..=n {
                        let dim_quot =
                            sub_n.spaces[v - 1].dim() - sub_p.spaces[v - 1].dim();
                        if counts.get(&v).copied().unwrap_or(0) != dim_quot {
                            eprintln!("  skew count mismatch at n={n} psi={psi_n:?}/{psi_p:?} label {v}");
                            ok = false;
                        }
                    }
                }
            }
        }
        // Manhattan degree equals the phi degree on all ProjQuot map pairs.
        for r in 1..=n {
            for s in r + 1..=n + 1 {
                for j in 1..=n {
                    for k in j + 1..=n + 1 {
                        let dx = proj_quot_diagram(r, s);
                        let dy = proj_quot_diagram(j, k);
                        let maps = enumerate_maps(&dx, &dy);
                        let mut got: Vec<usize> = maps
                            .iter()
                            .map(|m| manhattan_degree(m, &dx, &dy).unwrap())
                            .collect();
                        got.sort_unstable();
                        let mut expect: Vec<usize> = phi_basis(n)
                            .into_iter()
                            .filter(|p| p.source() == (r, s) && p.target() == (j, k))
                            .map(|p| p.degree())
                            .collect();
                        expect.sort_unstable();
                        if got != expect {
                            eprintln!(
                                "  degree mismatch ({r},{s})->({j},{k}) n={n}: {got:?} vs {expect:?}"
                            );
                            ok = false;
                        }
                    }
                }
            }
        }
    }
    if !ext_defects.is_empty() {
        eprintln!(
            "  extension conformance fails on {} pair(s); every defect is a juxtaposition count \
             of 1 against a 2-dimensional Ext space:",
            ext_defects.len()
        );
        for d in &ext_defects {
            eprintln!("    {d}");
        }
        eprintln!(
            "  a single relative placement cannot carry a 2-dimensional space of extensions; \
             maps, skew cell counts, and degrees conform exactly (see the project notes)"
        );
        ok = false;
    }
    (ok, "map/extension counts, skew cell counts, and Manhattan degrees on the tableau families, n <= 5")
}

fn criterion_08_block_discovery() -> (bool, &'static str) {
    let mut ok = true;
    // sl2 preset: the block of c is {c, -c-2} as ordered evaluation pairs.
    for c in 0..=5i64 {
        let block = discover_block(&Presentation::preset_sl2(), &Weight(rat_int(c)), 64).unwrap();
        let got = block.values();
        ok &= got == vec![rat_int(-c - 2), rat_int(c)] && block.complete;
    }
    // Quadratic preset: size-3 block with singular degrees {1, 3}.
    let quad = Presentation::poly_shift(
        rat_int(1),
        rat_int(1),
        QPoly::new(vec![rat_int(0), rat(-5, 3), rat_int(1)]),
        QPoly::one(),
    )
    .unwrap();
    let block = discover_block(&quad, &Weight(rat_int(0)), 64).unwrap();
    ok &= block.values() == vec![rat_int(3), rat_int(1), rat_int(0)] && block.complete;
    ok &= singular_degrees(&quad, &Weight(rat_int(0)), 10).unwrap() == vec![1, 3];
    // The z~ additivity identity holds symbolically for all m, n <= 10 on
    // 100 seeded random presentations (the twist is theta^(n-1), as forced
    // by the defining sums).
    let mut rng = ChaCha8Rng::seed_from_u64(20260811);
    // Small rationals with power-of-two denominators keep the symbolic
    // check fast; the identity itself is denominator-agnostic.
    let small = |rng: &mut ChaCha8Rng| -> Rat {
        rat(rng.gen_range(-4..=4), [1, 2][rng.gen_range(0..2)])
    };
    let nonzero = |rng: &mut ChaCha8Rng| -> Rat {
        loop {
            let v = rat(rng.gen_range(-4..=4), [1, 2][rng.gen_range(0..2)]);
            if !num::Zero::is_zero(&v) {
                return v;
            }
        }
    };
    for trial in 0..100 {
        let pres = if trial % 2 == 0 {
            let z0 = QPoly::new((0..3).map(|_| small(&mut rng)).collect());
            let z1 = QPoly::new(vec![small(&mut rng), nonzero(&mut rng)]);
            Presentation::poly_shift(nonzero(&mut rng), small(&mut rng), z0, z1).unwrap()
        } else {
            let z0 = LPoly::new(-1, (0..3).map(|_| small(&mut rng)).collect());
            let z1 = LPoly::new(0, vec![nonzero(&mut rng)]);
            Presentation::laurent(nonzero(&mut rng), z0, z1).unwrap()
        };
        let table = ZtildeTable::new(&pres, 20);
        for n in 1..=10i64 {
            for m in 0..=10i64 {
                let lhs = table.ztilde(m + n).unwrap().clone();
                let rhs = pres.add(
                    &pres.mul(
                        table.ztilde(n).unwrap(),
                        &pres.theta(table.zprime(m as usize).unwrap(), n - 1),
                    ),
                    &pres.theta(table.ztilde(m).unwrap(), n),
                );
                if lhs != rhs {
                    eprintln!("  additivity fails at trial {trial}, m={m}, n={n}");
                    ok = false;
                }
            }
        }
    }
    (ok, "sl2/quadratic presets and the z~ additivity identity on 100 random presentations")
}

fn criterion_09_skl_and_reciprocity() -> (bool, &'static str) {
    let ok = (1..=10).all(|n| skl_check(n) && bgg_reciprocity_check(n));
    (ok, "SKL parity and BGG reciprocity, n <= 10")
}

fn criterion_10_rendering_golden() -> (bool, &'static str) {
    let fig1 = yt_of_psi(&[5, 3, 2]).unwrap();
    let fig2 = skew(&[6, 4, 3, 2], &[4, 3]).unwrap();
    let golden1 = "5\n432\n321\n21\n1";
    let golden2 = "6\n5432\n::21\n::1";
    let mut ok = render(&fig1) == golden1 && render(&fig2) == golden2;
    for golden in [golden1, golden2] {
        let parsed = parse(golden).unwrap();
        ok &= render(&parsed) == golden;
    }
    (ok, "the two tableau figures round-trip byte-exactly through render/parse")
}

fn multiplicity_dictionary_between_layers() -> (bool, &'static str) {
    // Shared sanity net: representation dimensions, formula multiplicities,
    // and diagram label counts agree object by object.
    for n in 1..=4usize {
        for x in standard_objects(n) {
            let rep: QuiverRep<Q> = build(n, &x).unwrap();
            for i in 1..=n {
                assert_eq!(rep.dim(i), mult(n, &x, i).unwrap());
            }
        }
        let amb: QuiverRep<F2> = build(n, &ObjectRef::ProjQuot { j: 1, k: n + 1 }).unwrap();
        for sub in enumerate_submodules(&amb, 10_000_000).unwrap() {
            let psi = transfer_psi(&amb, &sub).unwrap();
            let diagram = yt_of_psi(&psi).unwrap();
            let counts = diagram.label_counts();
            let (srep, _) = subrep(&amb, &sub);
            for v in 1..=n {
                assert_eq!(counts.get(&v).copied().unwrap_or(0), srep.dim(v));
            }
        }
    }
    (true, "representation dims, formula multiplicities, and cell counts agree")
}
