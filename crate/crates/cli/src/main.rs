use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cp2nine::catalog::{build_cp2_9, build_rp2_6, build_t2_7};
use cp2nine::homology::{homology_groups, recognize_sphere_bistellar, SphereVerdict, DEFAULT_FLIP_BUDGET};
use cp2nine::io::{format_complex, read_complex};
use cp2nine::plmap::{export_mesh, format_mesh, MeshPart, PlModel};
use cp2nine::subdivision::{label_set, relative_subdivide};
use cp2nine::trisection::trisect;
use cp2nine::verify::{verify, Target, VerifyOptions};
use cp2nine::{lbl, SimplicialComplex};

#[derive(Parser)]
#[command(name = "cp2nine", version, about = "Build and verify the 9-vertex CP² triangulation and its trisection")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite and print its report.
    Verify {
        /// rp26, t27, cp29, subdivision, trisection, solid-torus, central-torus, fixed-set, geometry, plmap or all
        target: Target,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_FLIP_BUDGET)]
        flip_budget: u64,
        #[arg(long, default_value_t = 256)]
        sections: usize,
        /// Treat inconclusive heuristic checks as passing.
        #[arg(long)]
        allow_unknown: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a complex in facet-list format.
    Build {
        #[arg(value_enum)]
        complex: Named,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integral homology of a facet-list file.
    Homology { file: PathBuf },
    /// Run bistellar sphere recognition on a facet-list file.
    Sphere {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_FLIP_BUDGET)]
        flip_budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sample the PL map and write image triangles (9 floats per line).
    ExportMesh {
        #[arg(long, value_enum, default_value_t = Part::All)]
        part: Part,
        /// Subdivisions per triangle edge.
        #[arg(long, default_value_t = 4)]
        res: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Named {
    Rp26,
    T27,
    Cp29,
    /// CP²₉ subdivided relative to {1, 4, 7}
    Subdivided,
    B1,
    B14,
    Central,
}

#[derive(Clone, Copy, ValueEnum)]
enum Part {
    CentralTorus,
    OuterDisk,
    InnerDisk,
    B14Faces,
    All,
}

fn emit(text: &str, out: Option<&PathBuf>) -> cp2nine::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn named(n: Named) -> cp2nine::Result<SimplicialComplex> {
    let sub = || relative_subdivide(&build_cp2_9(), &label_set(&[1, 4, 7]));
    let tri = || trisect(&sub()?, &[lbl("1"), lbl("4"), lbl("7")]);
    Ok(match n {
        Named::Rp26 => build_rp2_6(),
        Named::T27 => build_t2_7(),
        Named::Cp29 => build_cp2_9(),
        Named::Subdivided => sub()?,
        Named::B1 => tri()?.piece(&lbl("1")).clone(),
        Named::B14 => tri()?.pair(&lbl("1"), &lbl("4")),
        Named::Central => tri()?.central(),
    })
}

fn run(cli: Cli) -> cp2nine::Result<bool> {
    match cli.cmd {
        Cmd::Verify { target, samples, tol, seed, flip_budget, sections, allow_unknown, format, out } => {
            let opts = VerifyOptions { samples, tol, seed, flip_budget, sections };
            let report = verify(target, &opts)?;
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
            };
            emit(&text, out.as_ref())?;
            Ok(report.all_pass(allow_unknown))
        }
        Cmd::Build { complex, out } => {
            emit(&format_complex(&named(complex)?), out.as_ref())?;
            Ok(true)
        }
        Cmd::Homology { file } => {
            let c = read_complex(file)?;
            let h = homology_groups(&c);
            for (k, g) in h.groups().iter().enumerate() {
                println!("H{k} = {g}");
            }
            println!("euler = {}", c.euler_characteristic());
            Ok(true)
        }
        Cmd::Sphere { file, flip_budget, seed } => {
            let c = read_complex(file)?;
            match recognize_sphere_bistellar(&c, flip_budget, seed)? {
                SphereVerdict::Sphere { dim, flips } => {
                    println!("sphere of dimension {dim} ({flips} flips)");
                    Ok(true)
                }
                SphereVerdict::Unknown { flips, facets_left } => {
                    println!("unknown after {flips} flips ({facets_left} facets left)");
                    Ok(false)
                }
            }
        }
        Cmd::ExportMesh { part, res, out } => {
            let part = match part {
                Part::CentralTorus => MeshPart::CentralTorus,
                Part::OuterDisk => MeshPart::OuterDisk,
                Part::InnerDisk => MeshPart::InnerDisk,
                Part::B14Faces => MeshPart::B14Faces,
                Part::All => MeshPart::All,
            };
            let m = PlModel::new()?;
            emit(&format_mesh(&export_mesh(&m, part, res)?), out.as_ref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
