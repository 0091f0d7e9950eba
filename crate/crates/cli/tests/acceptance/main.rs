//! The contract this project ships against: ten checks, each printing a
//! single PASS/FAIL line (visible under `--nocapture`). Every check
//! verifies library output against data frozen from worked examples or
//! against an independent oracle in `oracle.rs`.

mod oracle;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use eqdecomp::fixtures::{
    PlantedSpec, directed_ladder, figure1_automorphism, figure1_graph, k_sun, network_blocks,
    network_laplacian_partial, planted_random, sharpness_tree, trigraph10,
};
use eqdecomp::{
    C64, CMatrix, MatrixKind, OrbitKind, Permutation, SpectrumMultiset, build_matrix,
    count_bounds, count_simple, decompose, divisor_matrix, eigenvalues, multiset_equal,
    orbit_partition, orbit_structure, power_to_basic, spectral_bounds, unity_power,
    verify_similarity,
};

fn report(id: u32, label: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("criterion {id:02}: PASS — {label}");
    } else {
        println!("criterion {id:02}: FAIL — {label}: {}", failures.join("; "));
        panic!("criterion {id:02} failed: {}", failures.join("; "));
    }
}

fn check(failures: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        failures.push(msg());
    }
}

fn real_multiset(values: &[f64]) -> SpectrumMultiset {
    SpectrumMultiset::from_values(values.iter().map(|&x| C64::new(x, 0.0)).collect(), 0.0)
}

fn pooled_spectrum(d: &eqdecomp::Decomposition) -> SpectrumMultiset {
    let mut values = eigenvalues(&d.divisor_block).unwrap().values().to_vec();
    for b in &d.blocks {
        values.extend(eigenvalues(b).unwrap().values());
    }
    SpectrumMultiset::from_values(values, 0.0)
}

#[test]
fn criterion_01_quarter_turn_adjacency_blocks_and_spectrum() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let g = figure1_graph();
    let phi = figure1_automorphism();
    let a = build_matrix(&g, MatrixKind::Adjacency).unwrap();
    let d = decompose(&a, &phi).unwrap();

    let b0 = CMatrix::from_real_rows(&[&[0.0, 2.0], &[2.0, 3.0]]);
    let b2 = CMatrix::from_real_rows(&[&[0.0, 0.0], &[0.0, -1.0]]);
    check(&mut failures, d.divisor_block.sub(&b0).max_abs() <= 1e-12, || {
        "divisor block differs from [[0,2],[2,3]]".into()
    });
    check(&mut failures, d.blocks[1].sub(&b2).max_abs() <= 1e-12, || {
        "B_2 differs from [[0,0],[0,-1]]".into()
    });

    let expected = real_multiset(&[4.0, 1.0, 1.0, 0.0, -1.0, -1.0, -2.0, -2.0]);
    let full = eigenvalues(a.entries()).unwrap();
    check(&mut failures, multiset_equal(&full, &expected, 1e-8), || {
        format!("spectrum {:?} differs from {{4,1,1,0,-1,-1,-2,-2}}", full.to_pairs())
    });
    check(&mut failures, multiset_equal(&pooled_spectrum(&d), &expected, 1e-8), || {
        "pooled block spectra differ from the known multiset".into()
    });

    let elapsed = started.elapsed();
    check(&mut failures, elapsed.as_secs_f64() < 1.0, || {
        format!("took {elapsed:?}, budget 1s")
    });
    report(1, "adjacency blocks and spectrum of the 8-vertex example", failures);
}

#[test]
fn criterion_02_quarter_turn_laplacian_spectrum() {
    let mut failures = Vec::new();

    let g = figure1_graph();
    let phi = figure1_automorphism();
    let l = build_matrix(&g, MatrixKind::Laplacian).unwrap();

    let root6 = 6.0_f64.sqrt();
    let expected = real_multiset(&[
        0.0,
        4.0,
        4.0 + root6,
        4.0 - root6,
        4.0 + root6,
        4.0 - root6,
        2.0,
        6.0,
    ]);
    let full = eigenvalues(l.entries()).unwrap();
    check(&mut failures, multiset_equal(&full, &expected, 1e-8), || {
        format!("σ(L) = {:?} differs from {{0,4}} ∪ {{4±√6}}×2 ∪ {{2,6}}", full.to_pairs())
    });

    let d = decompose(&l, &phi).unwrap();
    check(&mut failures, multiset_equal(&pooled_spectrum(&d), &expected, 1e-8), || {
        "pooled Laplacian block spectra differ from the known multiset".into()
    });
    report(2, "Laplacian spectrum of the 8-vertex example", failures);
}

#[test]
fn criterion_03_three_fold_symmetry_divisor_and_complex_block() {
    let mut failures = Vec::new();

    let (g, phi) = trigraph10();
    let a = build_matrix(&g, MatrixKind::Adjacency).unwrap();
    let d = decompose(&a, &phi).unwrap();

    let div_spectrum = eigenvalues(&d.divisor_block).unwrap();
    let expected_div = real_multiset(&[3.0, 1.0, -2.0, -2.0]);
    check(&mut failures, multiset_equal(&div_spectrum, &expected_div, 1e-8), || {
        format!("divisor spectrum {:?} differs from {{3,1,-2,-2}}", div_spectrum.to_pairs())
    });

    let b1_spectrum = eigenvalues(&d.blocks[0]).unwrap();
    let expected_b1 = real_multiset(&[1.87939, -0.347296, -1.53209]);
    check(&mut failures, multiset_equal(&b1_spectrum, &expected_b1, 1e-3), || {
        format!("σ(B₁) = {:?} misses the frozen reference values", b1_spectrum.to_pairs())
    });

    let full = eigenvalues(a.entries()).unwrap();
    check(&mut failures, multiset_equal(&pooled_spectrum(&d), &full, 1e-8), || {
        "pooled block spectra differ from the direct eigensolve".into()
    });
    report(3, "10-vertex trigraph divisor and B₁ spectra", failures);
}

#[test]
fn criterion_04_sun_graphs_attain_the_symmetric_bounds() {
    let mut failures = Vec::new();

    for (ks, expected_simple, expected_bound) in
        [(vec![3, 5, 7, 9, 11], 2usize, 2usize), (vec![4, 6, 8, 10], 4, 4)]
    {
        for k in ks {
            let (g, phi) = k_sun(k).unwrap();
            let a = build_matrix(&g, MatrixKind::Adjacency).unwrap();
            let spectrum = eigenvalues(a.entries()).unwrap();
            let simple = count_simple(&spectrum, eqdecomp::DEFAULT_CLUSTER_TOL);
            check(&mut failures, simple == expected_simple, || {
                format!("k={k}: {simple} simple eigenvalues, expected {expected_simple}")
            });

            let bounds = count_bounds(&phi, 2 * k).unwrap();
            let reported = bounds[0].bound();
            check(&mut failures, reported == expected_bound, || {
                format!("k={k}: bound checker reports {reported}, expected {expected_bound}")
            });
            let line = bounds[0].to_string();
            check(&mut failures, line.contains(&format!("at most {expected_bound}")), || {
                format!("k={k}: report line {line:?} lacks the bound")
            });
        }
    }
    report(4, "sun graphs have exactly 2 (odd k) or 4 (even k) simple eigenvalues", failures);
}

#[test]
fn criterion_05_directed_ladder_closed_form_spectra() {
    let mut failures = Vec::new();

    for k in 2..=10usize {
        let (g, phi) = directed_ladder(k).unwrap();
        let a = build_matrix(&g, MatrixKind::Adjacency).unwrap();

        let mut expected = Vec::with_capacity(2 * k);
        for j in 0..k {
            let w = unity_power(k, j);
            expected.push(w + 1.0);
            expected.push(w - 1.0);
        }
        let expected = SpectrumMultiset::from_values(expected, 0.0);

        let full = eigenvalues(a.entries()).unwrap();
        check(&mut failures, multiset_equal(&full, &expected, 1e-10), || {
            format!("k={k}: spectrum differs from {{±1+ω^j}}")
        });

        let d = decompose(&a, &phi).unwrap();
        check(&mut failures, multiset_equal(&pooled_spectrum(&d), &expected, 1e-10), || {
            format!("k={k}: pooled blocks differ from {{±1+ω^j}}")
        });

        let simple = count_simple(&full, eqdecomp::DEFAULT_CLUSTER_TOL);
        let expected_simple = if k % 2 == 1 { 2 * k } else { 2 * k - 2 };
        check(&mut failures, simple == expected_simple, || {
            format!("k={k}: {simple} simple eigenvalues, expected {expected_simple}")
        });
        if k > 2 {
            check(&mut failures, simple > 4, || {
                format!("k={k}: expected the symmetric bound 2r=4 to be exceeded")
            });
        }
    }
    report(5, "directed ladder spectra match ±1+ω^j and beat the symmetric bound", failures);
}

#[test]
fn criterion_06_sharp_trees_rank_and_simple_count() {
    let mut failures = Vec::new();

    for (n, path) in [(8usize, 3usize), (10, 5), (12, 3)] {
        let (g, phi) = sharpness_tree(n, path).unwrap();
        let a = build_matrix(&g, MatrixKind::Adjacency).unwrap();

        let rank = oracle::rank(a.entries(), 1e-8);
        check(&mut failures, rank == path + 1, || {
            format!("(n={n},N={path}): rank {rank}, expected {}", path + 1)
        });

        let spectrum = eigenvalues(a.entries()).unwrap();
        let simple = count_simple(&spectrum, eqdecomp::DEFAULT_CLUSTER_TOL);
        check(&mut failures, simple == path + 1, || {
            format!("(n={n},N={path}): {simple} simple eigenvalues, expected {}", path + 1)
        });

        let bounds = count_bounds(&phi, n).unwrap();
        check(
            &mut failures,
            bounds[0].kind_name() == "BasicOdd" && bounds[0].bound() == path + 1,
            || format!("(n={n},N={path}): bound {} ≠ N+1", bounds[0]),
        );
    }
    report(6, "leaf-rotation trees: adjacency rank and simple count both equal N+1", failures);
}

#[test]
fn criterion_07_network_blocks_and_gap_report() {
    let mut failures = Vec::new();

    let blocks = network_blocks();
    let b11 = &blocks[0];
    assert_eq!(b11.label, "B1,1");
    let spectrum = eigenvalues(&b11.matrix).unwrap();
    let expected = real_multiset(&[1.170, 0.0, -0.689, -2.481]);
    check(&mut failures, multiset_equal(&spectrum, &expected, 1e-3), || {
        format!("σ(B1,1) = {:?} misses the frozen reference values", spectrum.to_pairs())
    });

    let partial = network_laplacian_partial();
    let bounds = spectral_bounds(&partial, MatrixKind::Laplacian).unwrap();
    let gap = bounds.gap_upper_bound;
    check(&mut failures, gap.is_some_and(|g| (g - 0.523).abs() <= 1e-3), || {
        format!("gap bound {gap:?}, expected ≈ 0.523")
    });

    let json = serde_json::to_string(&bounds).unwrap();
    check(&mut failures, json.contains("\"gapUpperBound\":0.523"), || {
        format!("JSON report {json} lacks gapUpperBound = 0.523")
    });
    report(7, "network blocks reproduce their asserted spectra; gap bound 0.523", failures);
}

#[test]
fn criterion_08_planted_property_suite() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let mut checked = 0;
    for i in 0..500u64 {
        let k = 2 + (i % 5) as usize;
        let fixed = (i % 3) as usize;
        // directed instances are drawn weighted: 0/1 directed matrices
        // routinely have coincident rows, whose defective zero
        // eigenvalues no dense solver can pin down to the tolerance
        // asserted below (directed 0/1 spectra are covered exactly by
        // the ladder fixture instead)
        let (directed, weighted) = match i % 4 {
            0 => (false, false),
            2 => (false, true),
            _ => (true, true),
        };
        let orbits = (2 + (i * 7 % 9) as usize).min((60 - fixed) / k);
        let spec = PlantedSpec {
            n: fixed + k * orbits,
            k,
            fixed,
            density: 0.2 + 0.6 * (i % 7) as f64 / 6.0,
            directed,
            weighted,
        };
        let inst = planted_random(i, &spec).unwrap();
        let kind = if spec.weighted { MatrixKind::WeightedAdjacency } else { MatrixKind::Adjacency };
        let m = build_matrix(&inst.graph, kind).unwrap();
        let phi = &inst.automorphism;

        let d = decompose(&m, phi).unwrap();
        let scale = m.entries().inf_norm().max(1.0);
        let residual = verify_similarity(&m, phi, &d).unwrap();
        check(&mut failures, residual <= 1e-10 * scale, || {
            format!("instance {i}: residual {residual:.3e} over budget")
        });

        let full = eigenvalues(m.entries()).unwrap();
        check(&mut failures, multiset_equal(&pooled_spectrum(&d), &full, 1e-7), || {
            format!("instance {i}: pooled spectra mismatch")
        });

        let div = divisor_matrix(&m, &orbit_partition(phi)).unwrap();
        check(&mut failures, &d.divisor_block == div.entries(), || {
            format!("instance {i}: divisor block differs from the partition route")
        });

        if !spec.directed {
            for j in 1..d.k {
                let diff = d.blocks[j - 1].transpose().sub(&d.blocks[d.k - j - 1]).max_abs();
                check(&mut failures, diff <= 1e-12, || {
                    format!("instance {i}: B_{} vs B_{}ᵀ differ by {diff:.3e}", d.k - j, j)
                });
            }
        }
        checked += 1;
        if !failures.is_empty() && failures.len() > 10 {
            break;
        }
    }
    check(&mut failures, checked == 500, || format!("only ran {checked} instances"));

    let elapsed = started.elapsed();
    check(&mut failures, elapsed.as_secs_f64() < 60.0, || {
        format!("suite took {elapsed:?}, budget 60s")
    });
    report(8, "500 planted instances: residual, spectra, divisor, transpose symmetry", failures);
}

#[test]
fn criterion_09_eigensolver_matches_char_poly_roots() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xE16);

    for i in 0..200 {
        let n = 1 + (i % 5);
        let mut m = CMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                m[(r, c)] = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }

        let computed = eigenvalues(&m).unwrap();
        let oracle_roots = SpectrumMultiset::from_values(oracle::eigen_by_char_poly(&m), 0.0);
        check(&mut failures, multiset_equal(&computed, &oracle_roots, 1e-8), || {
            format!(
                "matrix {i} (n={n}): QR {:?} vs char-poly {:?}",
                computed.to_pairs(),
                oracle_roots.to_pairs()
            )
        });

        let trace: C64 = (0..n).map(|d| m[(d, d)]).sum();
        let eig_sum: C64 = computed.values().iter().sum();
        check(&mut failures, (trace - eig_sum).norm() <= 1e-10, || {
            format!("matrix {i}: trace {trace} vs eigenvalue sum {eig_sum}")
        });

        let det = oracle::det_lu(&m);
        let eig_prod: C64 = computed.values().iter().product();
        check(&mut failures, (det - eig_prod).norm() <= 1e-8 * (1.0 + det.norm()), || {
            format!("matrix {i}: det {det} vs eigenvalue product {eig_prod}")
        });
    }
    report(9, "200 random complex matrices agree with characteristic-polynomial roots", failures);
}

#[test]
fn criterion_10_every_small_permutation_has_a_usable_power() {
    let mut failures = Vec::new();

    let mut total = 0usize;
    for n in 1..=7usize {
        let mut images: Vec<usize> = (1..=n).collect();
        permute_all(&mut images, 0, &mut |perm| {
            let phi = Permutation::from_images(perm.to_vec()).unwrap();
            if phi.is_identity() {
                return;
            }
            total += 1;
            match power_to_basic(&phi) {
                Ok((e, power)) => {
                    let kind = orbit_structure(&power).kind;
                    let usable =
                        matches!(kind, OrbitKind::Uniform { .. } | OrbitKind::Basic { .. });
                    if !usable {
                        failures.push(format!("{phi}: power {e} has kind {kind}"));
                    } else if e > phi.order() {
                        failures.push(format!("{phi}: exponent {e} exceeds order {}", phi.order()));
                    }
                }
                Err(err) => failures.push(format!("{phi}: {err}")),
            }
            if failures.len() > 10 {
                return;
            }
        });
    }
    check(&mut failures, total == 5906, || {
        format!("enumerated {total} non-identity permutations, expected 5906")
    });
    report(10, "all non-identity permutations of n ≤ 7 reach a uniform or basic power", failures);
}

fn permute_all(items: &mut [usize], start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute_all(items, start + 1, visit);
        items.swap(start, i);
    }
}
