use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use goldentiles::crs::{crs_construct, verify_decompositions};
use goldentiles::exactnum::fields::field_tower_report;
use goldentiles::inflation::{
    covering_brute_force, covering_certificate, certificate_is_valid, integrality_spectrum, reconstruct_matrix,
    reference_m_gt, verify_eigen_relations, InvariantSystem, PowerCoefficients,
};
use goldentiles::mosseri_sadoc::{build_tile_invariants, ms_invariant_system, psi_gt, MS_TILES};
use goldentiles::polyhedra::{build_catalog, polyhedron_dehn, scissor_equivalent, Catalog, ExactPolyhedron, GoldenName, Invariants};
use goldentiles::{Error, GoldenNumber, NumCtx, RationalMatrix};
use serde_json::{json, Value};

mod checks;
mod format;
mod report;

use format::{exact, inline, labeled_matrix, matrix_json};
use report::Report;

const GT_NAMES: [&str; 6] = ["A*", "B*", "C*", "D*", "F*", "G*"];

#[derive(Parser)]
#[command(name = "goldentiles", version, about = "Exact invariants of golden tetrahedra tilings")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Markdown)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Markdown,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TileSet {
    Gt,
    Ms,
}

#[derive(Subcommand)]
enum Command {
    /// Names, edge labels, volumes and Dehn invariants of the golden tetrahedra.
    Catalog,
    /// Dehn invariant (and volume, if given) of a polyhedron JSON file.
    Dehn { path: PathBuf },
    /// Volumes of the golden tetrahedra and the Mosseri–Sadoc tiles.
    Volumes,
    /// Reconstructs an inflation matrix from its eigen-relations.
    Reconstruct {
        #[arg(long, value_enum, default_value_t = TileSet::Gt)]
        set: TileSet,
        /// Re-verifies the eigen-relations in Q[τ].
        #[arg(long)]
        check_eigen: bool,
    },
    /// M_gt^k and its expression through M³, M², M and Id.
    Power {
        #[arg(long, default_value_t = 3)]
        k: u32,
    },
    /// Which powers M_gt^k, k ≤ kmax, are integral.
    Integrality {
        #[arg(long, default_value_t = 30)]
        kmax: u32,
    },
    /// Impossibility of σ^k = Σ αᵢσ^i with αᵢ ≥ 0, α₀ > 0.
    Covering {
        /// Exponent of the ψ-sequence certificate.
        #[arg(long, default_value_t = 8)]
        k: u32,
        /// Largest exponent searched exhaustively.
        #[arg(long, default_value_t = 8)]
        kmax: u32,
    },
    /// Structure of the field tower Q[τ, ρ, √3].
    Fields,
    /// Geodetic basis angle ⟨p⟩_d; without arguments, α = ⟨5⟩₁ and γ = π/2 − 2⟨3⟩₅.
    Crs {
        #[arg(long, requires = "d")]
        p: Option<u64>,
        #[arg(long, requires = "p")]
        d: Option<u64>,
    },
    /// Scissors congruence of two polyhedra, each a catalog name (A*..G*) or a JSON file with a volume.
    Equivalent { first: String, second: String },
    /// Runs the full verification suite.
    VerifyAll {
        #[arg(long, default_value_t = 30)]
        kmax: u32,
        #[arg(long, hide = true)]
        corrupt_m2f: bool,
    },
}

enum Failure {
    Check,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(format: OutputFormat, value: Value, text: impl FnOnce() -> String) {
    match format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&value).unwrap_or_default()),
        OutputFormat::Markdown => print!("{}", text()),
    }
}

fn catalog() -> Result<Catalog, Failure> {
    Ok(build_catalog(&mut NumCtx::from_env())?)
}

fn run(cli: &Cli) -> CmdResult {
    let fmt = cli.format;
    match &cli.command {
        Command::Catalog => cmd_catalog(fmt),
        Command::Dehn { path } => cmd_dehn(fmt, path),
        Command::Volumes => cmd_volumes(fmt),
        Command::Reconstruct { set, check_eigen } => cmd_reconstruct(fmt, *set, *check_eigen),
        Command::Power { k } => cmd_power(fmt, *k),
        Command::Integrality { kmax } => cmd_integrality(fmt, *kmax),
        Command::Covering { k, kmax } => cmd_covering(fmt, *k, *kmax),
        Command::Fields => cmd_fields(fmt),
        Command::Crs { p, d } => cmd_crs(fmt, *p, *d),
        Command::Equivalent { first, second } => cmd_equivalent(fmt, first, second),
        Command::VerifyAll { kmax, corrupt_m2f } => {
            let opts = checks::Options {
                kmax: *kmax,
                corrupt_m2f: *corrupt_m2f,
                ..Default::default()
            };
            let report = Report::new(checks::run_all(&opts));
            emit(fmt, serde_json::to_value(&report).unwrap_or_default(), || report.to_markdown());
            match report.exit_code() {
                0 => Ok(()),
                1 => Err(Failure::Check),
                _ => Err(Failure::Input("internal error during verification".into())),
            }
        }
    }
}

fn cmd_catalog(fmt: OutputFormat) -> CmdResult {
    let cat = catalog()?;
    let twelve = GoldenNumber::from(12);
    let rows: Vec<Value> = cat
        .entries
        .iter()
        .map(|e| {
            json!({
                "name": e.name,
                "labels": e.labels,
                "volume12": exact(&(&e.volume * &twelve)),
                "dehn": { "beta": exact(&e.dehn.beta), "delta": exact(&e.dehn.delta) },
                "angles": e.angles.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "faces": e.faces,
            })
        })
        .collect();
    let flat = cat.flat.labels().unwrap_or_default();
    emit(fmt, json!({ "entries": rows, "flat_labels": flat }), || {
        let mut s = String::from("| name | labels | 12·V | Dehn β | Dehn δ |\n|---|---|---|---|---|\n");
        for e in &cat.entries {
            let labels: String = e.labels.iter().map(|l| l.to_string()).collect();
            s.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                e.name,
                labels,
                inline(&(&e.volume * &twelve)),
                inline(&e.dehn.beta),
                inline(&e.dehn.delta)
            ));
        }
        let flat: String = flat.iter().map(|l| l.to_string()).collect();
        s.push_str(&format!("\nflat class: {flat}\n"));
        s
    });
    Ok(())
}

fn read_polyhedron(path: &Path) -> Result<ExactPolyhedron, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        Failure::Input(format!("{}:{}:{}: {e}", path.display(), e.line(), e.column()))
    })
}

fn cmd_dehn(fmt: OutputFormat, path: &Path) -> CmdResult {
    let p = read_polyhedron(path)?;
    let d = polyhedron_dehn(&p)?;
    let value = json!({
        "dehn": { "beta": exact(&d.beta), "delta": exact(&d.delta) },
        "volume": p.volume.as_ref().map(exact),
        "edges": p.edges.len(),
    });
    emit(fmt, value, || {
        let mut s = format!("Dehn invariant: {d}\n  β: {}\n  δ: {}\n", inline(&d.beta), inline(&d.delta));
        if let Some(v) = &p.volume {
            s.push_str(&format!("volume: {}\nscissors invariants: ({v}, {d})\n", inline(v)));
        }
        s
    });
    Ok(())
}

fn cmd_volumes(fmt: OutputFormat) -> CmdResult {
    let cat = catalog()?;
    let ti = build_tile_invariants(&cat, &psi_gt())?;
    let gt: Vec<(String, GoldenNumber)> = cat.entries.iter().map(|e| (e.name.to_string(), e.volume.clone())).collect();
    let ms: Vec<(String, GoldenNumber)> = ti.tiles.iter().cloned().zip(ti.volumes.iter().cloned()).collect();
    let to_json = |v: &[(String, GoldenNumber)]| -> Value {
        v.iter().map(|(n, x)| json!({ "name": n, "volume": exact(x) })).collect()
    };
    emit(fmt, json!({ "golden_tetrahedra": to_json(&gt), "ms_tiles": to_json(&ms) }), || {
        let mut s = String::from("| tile | volume |\n|---|---|\n");
        for (n, v) in gt.iter().chain(&ms) {
            s.push_str(&format!("| {n} | {} |\n", inline(v)));
        }
        s
    });
    Ok(())
}

fn cmd_reconstruct(fmt: OutputFormat, set: TileSet, check_eigen: bool) -> CmdResult {
    let cat = catalog()?;
    let (sys, labels): (InvariantSystem, Vec<&str>) = match set {
        TileSet::Gt => (InvariantSystem::golden_tetrahedra(&cat), GT_NAMES.to_vec()),
        TileSet::Ms => {
            let ti = build_tile_invariants(&cat, &psi_gt())?;
            (ms_invariant_system(&ti)?, MS_TILES.to_vec())
        }
    };
    let (x, y) = sys.constraint_matrices()?;
    let m = reconstruct_matrix(&sys)?;
    let eigen = if check_eigen {
        Some(match verify_eigen_relations(&m.to_golden(), &sys) {
            Ok(()) => Ok(()),
            Err(Error::EigenRelationFailed(label)) => Err(label),
            Err(e) => return Err(e.into()),
        })
    } else {
        None
    };
    let eigen_json = eigen.as_ref().map(|r| match r {
        Ok(()) => json!({ "verified": true }),
        Err(label) => json!({ "verified": false, "failed": label }),
    });
    emit(
        fmt,
        json!({
            "tiles": labels,
            "matrix": matrix_json(&m),
            "constraints": { "x": matrix_json(&x), "y": matrix_json(&y) },
            "eigen_relations": eigen_json,
        }),
        || {
            let mut s = format!("M (rows are inflated tiles):\n{}", labeled_matrix(&labels, &m));
            s.push_str(&format!("\nX:\n{}\nY:\n{}", labeled_matrix(&labels, &x), labeled_matrix(&labels, &y)));
            if let Some(r) = &eigen {
                match r {
                    Ok(()) => s.push_str("\neigen-relations verified in Q[τ]\n"),
                    Err(l) => s.push_str(&format!("\neigen-relation {l} FAILED\n")),
                }
            }
            s
        },
    );
    match eigen {
        Some(Err(_)) => Err(Failure::Check),
        _ => Ok(()),
    }
}

fn cmd_power(fmt: OutputFormat, k: u32) -> CmdResult {
    if k == 0 {
        return Err(Failure::Input("--k must be positive".into()));
    }
    let m: RationalMatrix = reference_m_gt().pow(k)?;
    let pc = PowerCoefficients::new(k);
    emit(
        fmt,
        json!({
            "k": k,
            "matrix": matrix_json(&m),
            "integral": m.is_integral(),
            "coefficients": { "a": pc.a.to_string(), "b": pc.b.to_string(), "c": pc.c.to_string(), "d": pc.d.to_string() },
        }),
        || {
            format!(
                "M_gt^{k}:\n{}\nintegral: {}\nM^{k} = ({})·M³ + ({})·M² + ({})·M + ({})·Id\n",
                labeled_matrix(&GT_NAMES, &m),
                m.is_integral(),
                pc.a,
                pc.b,
                pc.c,
                pc.d
            )
        },
    );
    Ok(())
}

fn cmd_integrality(fmt: OutputFormat, kmax: u32) -> CmdResult {
    let spec = integrality_spectrum(&reference_m_gt(), kmax)?;
    let integral: Vec<u32> = spec.iter().filter(|(_, i)| *i).map(|(k, _)| *k).collect();
    emit(fmt, json!({ "kmax": kmax, "integral_powers": integral }), || {
        format!("integral powers of M_gt up to {kmax}: {integral:?}\n")
    });
    Ok(())
}

fn cmd_covering(fmt: OutputFormat, k: u32, kmax: u32) -> CmdResult {
    if k == 0 {
        return Err(Failure::Input("--k must be positive".into()));
    }
    let mut searches = Vec::new();
    for j in 1..=kmax {
        searches.push(covering_brute_force(j)?);
    }
    let cert = covering_certificate(k);
    let valid = certificate_is_valid(&cert);
    let found = searches.iter().any(|s| s.solution.is_some());
    emit(fmt, json!({ "searches": searches, "certificate": cert, "certificate_valid": valid }), || {
        let mut s = String::from("| k | nodes | solution |\n|---|---|---|\n");
        for r in &searches {
            s.push_str(&format!("| {} | {} | {:?} |\n", r.k, r.nodes, r.solution));
        }
        let psi: Vec<String> = cert.psi.iter().map(ToString::to_string).collect();
        s.push_str(&format!(
            "\ncertificate k = {k}: ψ = [{}]\n{}\nvalid: {valid}\n",
            psi.join(", "),
            cert.conclusion
        ));
        s
    });
    if found || !valid {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}

fn cmd_fields(fmt: OutputFormat) -> CmdResult {
    let r = field_tower_report();
    emit(fmt, serde_json::to_value(&r).unwrap_or_default(), || {
        format!(
            "x⁴−5x²+5 Eisenstein at 5: {}\nvanishes on ±ρ, ±(τ−1)ρ: {}\norder of σ: {:?}\nσ² fixes exactly Q[τ] in Q[ρ]: {}\n3 is not a square in Q[τ]: {}\nφ fixes Q[ρ]: {}\n",
            r.eisenstein_at_5,
            r.roots_vanish,
            r.sigma_order,
            r.sigma_squared_fixed_is_qtau,
            r.three_not_square_in_qtau,
            r.phi_fixes_q_rho
        )
    });
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_crs(fmt: OutputFormat, p: Option<u64>, d: Option<u64>) -> CmdResult {
    let mut ctx = NumCtx::from_env();
    if let (Some(p), Some(d)) = (p, d) {
        let c = crs_construct(p, d, &mut ctx)?;
        emit(fmt, serde_json::to_value(&c).unwrap_or_default(), || {
            format!(
                "⟨{p}⟩_{d}: s = {}, a = {}, b = {}\n4·{p}^{} = {}² + {d}·{}²\nvalue: {}\n",
                c.s, c.a, c.b, c.s, c.a, c.b, c.value
            )
        });
        return Ok(());
    }
    let r = verify_decompositions(&mut ctx)?;
    emit(fmt, serde_json::to_value(&r).unwrap_or_default(), || {
        format!(
            "⟨5⟩₁ = {}\n⟨3⟩₅ = {}\n|α − ⟨5⟩₁| = {:e}\n|γ − (π/2 − 2⟨3⟩₅)| = {:e}\ndistinct basis elements: {}\n",
            r.alpha_basis.value, r.gamma_basis.value, r.alpha_error, r.gamma_error, r.distinct_basis_elements
        )
    });
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn invariants_of(arg: &str, cat: &mut Option<Catalog>) -> Result<Invariants, Failure> {
    if let Ok(name) = arg.parse::<GoldenName>() {
        if cat.is_none() {
            *cat = Some(catalog()?);
        }
        return Ok(cat.as_ref().expect("catalog built").get(name).invariants());
    }
    let path = Path::new(arg);
    let p = read_polyhedron(path)?;
    let volume = p
        .volume
        .clone()
        .ok_or_else(|| Failure::Input(format!("{arg}: a volume is required for scissors congruence")))?;
    Ok(Invariants {
        volume,
        dehn: polyhedron_dehn(&p)?,
    })
}

fn cmd_equivalent(fmt: OutputFormat, first: &str, second: &str) -> CmdResult {
    let mut cat = None;
    let a = invariants_of(first, &mut cat)?;
    let b = invariants_of(second, &mut cat)?;
    let eq = scissor_equivalent(&a, &b);
    let side = |i: &Invariants| {
        json!({ "volume": exact(&i.volume), "dehn": { "beta": exact(&i.dehn.beta), "delta": exact(&i.dehn.delta) } })
    };
    emit(fmt, json!({ "first": side(&a), "second": side(&b), "equivalent": eq }), || {
        format!(
            "{first}: volume {}, Dehn {}\n{second}: volume {}, Dehn {}\nscissors congruent: {eq}\n",
            inline(&a.volume),
            a.dehn,
            inline(&b.volume),
            b.dehn
        )
    });
    Ok(())
}
