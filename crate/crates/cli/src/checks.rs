use goldentiles::angles::{exact_cos, AngleExpr};
use goldentiles::crs::{crs_construct, verify_decompositions};
use goldentiles::exactnum::fields::field_tower_report;
use goldentiles::inflation::{
    certificate_is_valid, chi_annihilates, covering_brute_force, covering_certificate, fibonacci,
    fibonacci_parity_check, fibonacci_power_check, integrality_spectrum, reconstruct_matrix,
    reference_m_gt, reference_m_gt_cubed, reference_m_gt_squared, tabulated_m_gt_squared,
    M_GT_SQUARED_CORRECTED_ENTRY, verify_eigen_relations, InvariantSystem,
    MAX_BRUTE_FORCE_K,
};
use goldentiles::mosseri_sadoc::{
    build_tile_invariants, five_tile_analysis, m_2f, m_ms, ms_invariant_system, psi_gt, psi_gt_five,
    reference_ms_alpha_coefficients, reference_ms_volumes12, subspace_invariance, t2f_checks,
};
use goldentiles::polyhedra::{
    build_catalog, enumerate_golden_tetrahedra, is_flat, polyhedron_dehn, scissor_equivalent, Catalog,
    ExactPolyhedron, GoldenName,
};
use goldentiles::{Error, GoldenMatrix, GoldenNumber, NumCtx, Result, TowerElement};
use serde_json::{json, Value};

use crate::format::{exact, matrix_json};
use crate::report::{CheckResult, Status};

#[derive(Debug, Clone)]
pub struct Options {
    pub kmax: u32,
    pub brute_force_kmax: u32,
    pub certificate_kmax: u32,
    pub fibonacci_nmax: u32,
    /// Replaces entry (1,1) of M_2F before checking it.
    pub corrupt_m2f: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            kmax: 30,
            brute_force_kmax: MAX_BRUTE_FORCE_K,
            certificate_kmax: 100,
            fibonacci_nmax: 15,
            corrupt_m2f: false,
        }
    }
}

type Outcome = Result<(bool, Value)>;

fn check(id: &str, description: &str, reference: &str, f: impl FnOnce() -> Outcome) -> CheckResult {
    let (status, details) = match f() {
        Ok((true, d)) => (Status::Pass, d),
        Ok((false, d)) => (Status::Fail, d),
        Err(e) => (Status::Error, json!({ "error": e.to_string() })),
    };
    CheckResult {
        id: id.into(),
        description: description.into(),
        status,
        reference: reference.into(),
        details,
    }
}

fn mismatch_details(e: Error) -> Outcome {
    match e {
        Error::MatrixMismatch { .. } | Error::EigenRelationFailed(_) => {
            Ok((false, json!({ "mismatch": e.to_string() })))
        }
        other => Err(other),
    }
}

/// M_2F with entry (1,1) replaced by 11τ−15.
pub fn corrupted_m2f() -> GoldenMatrix {
    let mut m = m_2f();
    m.set(0, 0, GoldenNumber::int(-15, 11));
    m
}

pub fn run_all(opts: &Options) -> Vec<CheckResult> {
    let mut ctx = NumCtx::from_env();
    let catalog = build_catalog(&mut ctx);
    let cat = || catalog.as_ref().map_err(Clone::clone);
    let mut out = Vec::new();

    out.push(check(
        "01.catalog.enumeration",
        "7 congruence classes of golden tetrahedra, 1 flat, 12·volumes exact",
        "golden tetrahedra volumes",
        || {
            let all = enumerate_golden_tetrahedra();
            let flat = all.iter().filter(|t| is_flat(t)).count();
            let cat = cat()?;
            let twelve = GoldenNumber::from(12);
            let mut ok = all.len() == 7 && flat == 1 && cat.entries.len() == 6;
            let mut vols = Vec::new();
            for e in &cat.entries {
                let v12 = &e.volume * &twelve;
                ok &= v12 == e.name.reference_volume12();
                vols.push(json!({ "name": e.name, "volume12": exact(&v12) }));
            }
            Ok((ok, json!({ "classes": all.len(), "flat": flat, "volumes12": vols })))
        },
    ));

    out.push(check(
        "02.catalog.dehn",
        "Dehn invariants from identified dihedral angles",
        "golden tetrahedra Dehn invariants",
        || {
            let cat = cat()?;
            let mut ok = true;
            let mut rows = Vec::new();
            for e in &cat.entries {
                ok &= e.dehn == e.name.reference_dehn();
                rows.push(json!({
                    "name": e.name,
                    "beta": exact(&e.dehn.beta),
                    "delta": exact(&e.dehn.delta),
                    "angles": e.angles.iter().map(ToString::to_string).collect::<Vec<_>>(),
                }));
            }
            Ok((ok, json!(rows)))
        },
    ));

    out.push(check(
        "03.angles.identities",
        "cos(α+γ+2β) = cos(α−γ+2δ) = −1 in the tower",
        "golden angle relations",
        || {
            let two = goldentiles::Rational::from(2);
            let first = AngleExpr::alpha() + AngleExpr::gamma() + AngleExpr::beta().scale(&two);
            let second = AngleExpr::alpha() - AngleExpr::gamma() + AngleExpr::delta().scale(&two);
            let c1 = exact_cos(&first)?;
            let c2 = exact_cos(&second)?;
            let minus_one = TowerElement::from(-1);
            Ok((
                c1 == minus_one && c2 == minus_one,
                json!({ "alpha+gamma+2beta": c1.to_string(), "alpha-gamma+2delta": c2.to_string() }),
            ))
        },
    ));

    out.push(check(
        "04.reconstruct.gt",
        "M_gt reconstructed from volume and Dehn eigen-relations",
        "inflation matrix of the golden tetrahedra",
        || {
            let sys = InvariantSystem::golden_tetrahedra(cat()?);
            let m = reconstruct_matrix(&sys)?;
            if m != reference_m_gt() {
                return Ok((false, json!({ "found": matrix_json(&m), "expected": matrix_json(&reference_m_gt()) })));
            }
            if let Err(e) = verify_eigen_relations(&m.to_golden(), &sys) {
                return mismatch_details(e);
            }
            Ok((true, json!({ "matrix": matrix_json(&m) })))
        },
    ));

    out.push(check(
        "05.reconstruct.ms",
        "M_MS reconstructed from tile volumes and the ᾱ Dehn line",
        "inflation matrix of the Mosseri–Sadoc tiles",
        || {
            let ti = build_tile_invariants(cat()?, &psi_gt())?;
            let sys = ms_invariant_system(&ti)?;
            let m = reconstruct_matrix(&sys)?;
            if m != m_ms() {
                return Ok((false, json!({ "found": matrix_json(&m), "expected": matrix_json(&m_ms()) })));
            }
            if let Err(e) = verify_eigen_relations(&m.to_golden(), &sys) {
                return mismatch_details(e);
            }
            Ok((true, json!({ "matrix": matrix_json(&m) })))
        },
    ));

    out.push(check(
        "06.powers.tabulated",
        "M_gt² and M_gt³ match the tabulated matrices (M_gt² corrected at (2,4))",
        "powers of the inflation matrix",
        || {
            let m = reference_m_gt();
            let sq = m.pow(2)?;
            let cu = m.pow(3)?;
            let tab = tabulated_m_gt_squared();
            let differing: Vec<(usize, usize)> = (0..sq.rows())
                .flat_map(|r| (0..sq.cols()).map(move |c| (r, c)))
                .filter(|&(r, c)| sq.get(r, c) != tab.get(r, c))
                .map(|(r, c)| (r + 1, c + 1))
                .collect();
            let ok = sq == reference_m_gt_squared()
                && cu == reference_m_gt_cubed()
                && differing == [M_GT_SQUARED_CORRECTED_ENTRY];
            Ok((
                ok,
                json!({
                    "square": matrix_json(&sq),
                    "cube": matrix_json(&cu),
                    "tabulated_square_differs_at": differing,
                }),
            ))
        },
    ));

    let kmax = opts.kmax;
    out.push(check(
        "07.powers.integrality",
        "M_gt^k is integral exactly when 3 | k",
        "integrality of powers",
        || {
            let spec = integrality_spectrum(&reference_m_gt(), kmax)?;
            let integral: Vec<u32> = spec.iter().filter(|(_, i)| *i).map(|(k, _)| *k).collect();
            let ok = spec.iter().all(|&(k, i)| i == (k % 3 == 0));
            Ok((ok, json!({ "kmax": kmax, "integral_powers": integral })))
        },
    ));

    let nmax = opts.fibonacci_nmax;
    out.push(check(
        "08.powers.fibonacci",
        "χ(M_gt) = 0 and Fibonacci power formula",
        "characteristic polynomial and power coefficients",
        || {
            let m = reference_m_gt();
            let chi = chi_annihilates(&m)?;
            let mut failures = Vec::new();
            for n in 1..=nmax {
                if !fibonacci_power_check(&m, n)? {
                    failures.push(n);
                }
            }
            let parity = fibonacci_parity_check(3 * nmax);
            Ok((
                chi && failures.is_empty() && parity,
                json!({ "chi_vanishes": chi, "nmax": nmax, "failures": failures, "parity": parity }),
            ))
        },
    ));

    let bf = opts.brute_force_kmax;
    out.push(check(
        "09.covering.brute_force",
        "σ^k = Σ αᵢσ^i has no solution with αᵢ ≥ 0, α₀ > 0",
        "covering impossibility",
        || {
            let mut rows = Vec::new();
            let mut ok = true;
            for k in 1..=bf {
                let s = covering_brute_force(k)?;
                ok &= s.solution.is_none();
                rows.push(json!({ "k": k, "nodes": s.nodes, "solution": s.solution }));
            }
            Ok((ok, json!(rows)))
        },
    ));

    let ck = opts.certificate_kmax;
    out.push(check(
        "10.covering.certificate",
        "ψ-sequence certificates with ψ_n = f_(2n+2)",
        "covering impossibility",
        || {
            let mut bad = Vec::new();
            for k in 1..=ck {
                let c = covering_certificate(k);
                let fib_ok = c.psi.iter().enumerate().all(|(n, p)| *p == fibonacci(2 * n as i64 + 2));
                if !certificate_is_valid(&c) || !fib_ok {
                    bad.push(k);
                }
            }
            Ok((bad.is_empty(), json!({ "kmax": ck, "invalid": bad })))
        },
    ));

    out.push(check(
        "11.fields.tower",
        "structure of Q[τ, ρ, √3]",
        "field tower",
        || {
            let r = field_tower_report();
            Ok((r.passed(), serde_json::to_value(&r).unwrap_or_default()))
        },
    ));

    out.push(check(
        "12.ms.tile_invariants",
        "volumes and ᾱ-collapsed Dehn values of z, h, s, a; d(m)+d(r) = d(h)",
        "Mosseri–Sadoc tile invariants",
        || {
            let cat = cat()?;
            let ti = build_tile_invariants(cat, &psi_gt())?;
            let five = build_tile_invariants(cat, &psi_gt_five())?;
            let twelve = GoldenNumber::from(12);
            let v12: Vec<GoldenNumber> = ti.volumes.iter().map(|v| v * &twelve).collect();
            let alpha: Vec<Option<GoldenNumber>> = ti.dehn.iter().map(|d| d.alpha_coefficient()).collect();
            let expected: Vec<Option<GoldenNumber>> =
                reference_ms_alpha_coefficients().into_iter().map(Some).collect();
            let split = match (five.get("m"), five.get("r"), ti.get("h")) {
                (Some((_, dm)), Some((_, dr)), Some((_, dh))) => &(dm + dr) == dh,
                _ => false,
            };
            let ok = v12 == reference_ms_volumes12() && alpha == expected && ti.alpha_collapse() && split;
            Ok((
                ok,
                json!({
                    "volumes12": v12.iter().map(exact).collect::<Vec<_>>(),
                    "dehn": ti.dehn.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "alpha_collapse": ti.alpha_collapse(),
                    "h_split": split,
                }),
            ))
        },
    ));

    out.push(check(
        "13.ms.subspace_invariance",
        "M_gt preserves Im ψ_gt and induces M_MS",
        "packing intertwiner",
        || {
            let n = subspace_invariance(&reference_m_gt(), &psi_gt())?;
            Ok((
                n.as_ref() == Some(&m_ms()),
                json!({ "induced": n.as_ref().map(matrix_json) }),
            ))
        },
    ));

    out.push(check(
        "14.ms.five_tile",
        "five-tile matrix is singular with kernel relation e_r + e_s − 2e_z",
        "five-tile analysis",
        || {
            let r = five_tile_analysis()?;
            Ok((r.passed(), serde_json::to_value(&r).unwrap_or_default()))
        },
    ));

    let corrupt = opts.corrupt_m2f;
    out.push(check(
        "15.ms.t2f",
        "colored matrix M_2F: spot entries, τ³ eigenvector, intertwiner, uncolored rows",
        "two-colored tetrahedra inflation",
        || {
            let m = if corrupt { corrupted_m2f() } else { m_2f() };
            match t2f_checks(&m, &reference_m_gt()) {
                Ok(r) => Ok((true, serde_json::to_value(&r).unwrap_or_default())),
                Err(e) => mismatch_details(e),
            }
        },
    ));

    out.push(check(
        "16.crs.construct",
        "⟨5⟩₁ = (1,2,4) and ⟨3⟩₅ = (2,4,2)",
        "geodetic basis angles",
        || {
            let mut ctx = NumCtx::from_env();
            let five = crs_construct(5, 1, &mut ctx)?;
            let three = crs_construct(3, 5, &mut ctx)?;
            let ok = (five.s, five.a, five.b) == (1, 2, 4)
                && (three.s, three.a, three.b) == (2, 4, 2)
                && [&five, &three]
                    .iter()
                    .all(|c| c.equation_holds() && c.exponent_is_minimal());
            Ok((ok, json!([five, three])))
        },
    ));

    out.push(check(
        "17.crs.decompositions",
        "α = ⟨5⟩₁ and γ = π/2 − 2⟨3⟩₅",
        "geodetic decompositions",
        || {
            let r = verify_decompositions(&mut NumCtx::from_env())?;
            Ok((r.passed(), serde_json::to_value(&r).unwrap_or_default()))
        },
    ));

    out.push(check(
        "18.dehn.cube",
        "the unit cube has zero Dehn invariant",
        "Dehn invariant",
        || {
            let d = polyhedron_dehn(&ExactPolyhedron::unit_cube())?;
            Ok((d.is_zero(), json!({ "dehn": d.to_string() })))
        },
    ));

    out.push(check(
        "19.dehn.equivalence",
        "C* and F* have equal volume but are not scissors congruent",
        "scissors congruence",
        || {
            let cat: &Catalog = cat()?;
            let c = cat.get(GoldenName::C).invariants();
            let f = cat.get(GoldenName::F).invariants();
            let equal_volume = c.volume == f.volume;
            let equivalent = scissor_equivalent(&c, &f);
            Ok((
                equal_volume && !equivalent,
                json!({ "equal_volume": equal_volume, "equivalent": equivalent }),
            ))
        },
    ));

    out
}
