//! Command-line front end over the plain-text formats.
//!
//! Exit codes: 0 when the command succeeds and every checked property
//! holds, 1 when a property is violated (axioms fail, an asserted audit
//! claim fails), 2 for malformed input or bad flags.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::algebra::{verify_axioms, FiniteKUAlgebra};
use crate::audit::{audit_propositions, AuditConfig};
use crate::code::generate_code;
use crate::enumerate::{enumerate_algebras_bounded, DEFAULT_ORDER_BOUND, MAX_ORDER_BOUND};
use crate::error::KuError;
use crate::function::KUFunction;
use crate::hasse::{code_dot, order_dot};
use crate::io;
use crate::reconstruct::reconstruct;

#[derive(Parser)]
#[command(
    name = "kualg",
    about = "Finite KU-algebras, cut functions, block codes and reconstruction",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the KU-algebra axioms of a Cayley table.
    Check {
        /// Algebra file (.kua)
        algebra: PathBuf,
    },
    /// Print the natural order of an algebra.
    Order {
        /// Algebra file (.kua)
        algebra: PathBuf,
        /// Emit the covering diagram in DOT format instead of the matrix
        #[arg(long)]
        dot: bool,
    },
    /// Generate the block code of an algebra (identity function by default).
    Code {
        /// Algebra file (.kua)
        algebra: PathBuf,
        /// Function file (.kuf) overriding the identity function
        #[arg(long)]
        function: Option<PathBuf>,
        /// Attach Θ-class labels as trailing comments
        #[arg(long)]
        labels: bool,
        /// Emit the covering diagram of the code in DOT format
        #[arg(long)]
        dot: bool,
    },
    /// Build an algebra and function back from a block code.
    Reconstruct {
        /// Code file (.kuc)
        code: PathBuf,
        /// Write the reconstructed algebra to this .kua file
        #[arg(long)]
        emit_algebra: Option<PathBuf>,
        /// Write the reconstructed function to this .kuf file
        #[arg(long)]
        emit_function: Option<PathBuf>,
    },
    /// List every KU-algebra of a given order.
    Enumerate {
        /// Order to enumerate
        n: usize,
        /// One representative per isomorphism class
        #[arg(long)]
        up_to_iso: bool,
        /// Print only the number of algebras
        #[arg(long)]
        count_only: bool,
        /// Raise the order bound (at most 5)
        #[arg(long, default_value_t = DEFAULT_ORDER_BOUND)]
        max: usize,
    },
    /// Evaluate the cut-set laws on an instance, in literal and corrected
    /// form.
    Audit {
        /// Algebra file (.kua)
        algebra: PathBuf,
        /// Function file (.kuf) overriding the identity function
        #[arg(long)]
        function: Option<PathBuf>,
        /// Require the literal (as-printed) claim forms to pass as well
        #[arg(long)]
        literal: bool,
        /// Cap on quantified subset sizes (default: exhaustive for orders
        /// up to 5, else 3)
        #[arg(long)]
        max_subset: Option<usize>,
    },
}

/// Parses `std::env::args` and runs the command; returns the process exit
/// code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return 2;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<i32, KuError> {
    match command {
        Command::Check { algebra } => check_cmd(&algebra),
        Command::Order { algebra, dot } => order_cmd(&algebra, dot),
        Command::Code {
            algebra,
            function,
            labels,
            dot,
        } => code_cmd(&algebra, function.as_deref(), labels, dot),
        Command::Reconstruct {
            code,
            emit_algebra,
            emit_function,
        } => reconstruct_cmd(&code, emit_algebra.as_deref(), emit_function.as_deref()),
        Command::Enumerate {
            n,
            up_to_iso,
            count_only,
            max,
        } => enumerate_cmd(n, up_to_iso, count_only, max),
        Command::Audit {
            algebra,
            function,
            literal,
            max_subset,
        } => audit_cmd(&algebra, function.as_deref(), literal, max_subset),
    }
}

fn check_cmd(path: &Path) -> Result<i32, KuError> {
    let table = io::load_kua(path)?;
    let report = verify_axioms(&table)?;
    if !report.passed() {
        println!("KU-algebra: FAIL");
        for failure in report.failures() {
            println!("{failure}");
        }
        return Ok(1);
    }
    if let Some(x) = (0..table.len()).find(|&x| table[x][0] != 0) {
        println!("KU-algebra: FAIL");
        println!("x*0 = 0 fails at x={x}");
        return Ok(1);
    }
    println!("KU-algebra: PASS");
    Ok(0)
}

/// Loads and validates an algebra; axiom violations map to exit 1.
fn load_algebra(path: &Path) -> Result<Result<FiniteKUAlgebra, i32>, KuError> {
    let table = io::load_kua(path)?;
    match FiniteKUAlgebra::new(table) {
        Ok(alg) => Ok(Ok(alg)),
        Err(KuError::AxiomsFailed(report)) => {
            eprintln!("{}: not a KU-algebra", path.display());
            for failure in report.failures() {
                eprintln!("{failure}");
            }
            Ok(Err(1))
        }
        Err(KuError::RightZeroFailed { x }) => {
            eprintln!("{}: not a KU-algebra", path.display());
            eprintln!("x*0 = 0 fails at x={x}");
            Ok(Err(1))
        }
        Err(other) => Err(other),
    }
}

fn load_function(path: &Path, alg: &FiniteKUAlgebra) -> Result<KUFunction, KuError> {
    let (labels, image) = io::load_kuf(path, alg.order())?;
    KUFunction::new(alg.clone(), labels, image)
}

fn order_cmd(path: &Path, dot: bool) -> Result<i32, KuError> {
    let alg = match load_algebra(path)? {
        Ok(alg) => alg,
        Err(code) => return Ok(code),
    };
    let ord = alg.natural_order();
    if dot {
        print!("{}", order_dot(&ord));
    } else {
        for x in 0..ord.size() {
            let row: Vec<&str> = (0..ord.size())
                .map(|y| if ord.leq(x, y) { "1" } else { "0" })
                .collect();
            println!("{}", row.join(" "));
        }
    }
    Ok(0)
}

fn code_cmd(path: &Path, function: Option<&Path>, labels: bool, dot: bool) -> Result<i32, KuError> {
    let alg = match load_algebra(path)? {
        Ok(alg) => alg,
        Err(code) => return Ok(code),
    };
    let f = match function {
        Some(fpath) => load_function(fpath, &alg)?,
        None => KUFunction::identity(alg),
    };
    let code = generate_code(&f);
    if dot {
        print!("{}", code_dot(&code));
    } else {
        print!("{}", io::write_kuc(&code, labels));
    }
    Ok(0)
}

fn reconstruct_cmd(
    path: &Path,
    emit_algebra: Option<&Path>,
    emit_function: Option<&Path>,
) -> Result<i32, KuError> {
    let code = io::load_kuc(path)?;
    let result = reconstruct(&code)?;
    println!("elements: {}", result.algebra.order());
    println!("exact: {}", result.exact);
    for (idx, (word, prov)) in result.word_of.iter().zip(&result.provenance).enumerate() {
        println!("{idx} {word} {prov}");
    }
    if let Some(out) = emit_algebra {
        write_file(out, &io::write_reconstruction_kua(&result))?;
    }
    if let Some(out) = emit_function {
        write_file(out, &io::write_kuf(&result.function))?;
    }
    Ok(0)
}

fn enumerate_cmd(n: usize, up_to_iso: bool, count_only: bool, max: usize) -> Result<i32, KuError> {
    if max > MAX_ORDER_BOUND {
        return Err(KuError::BoundExceeded {
            requested: max,
            bound: MAX_ORDER_BOUND,
        });
    }
    let algebras = enumerate_algebras_bounded(n, up_to_iso, max)?;
    if count_only {
        println!("{}", algebras.len());
    } else {
        let mut first = true;
        for alg in &algebras {
            if !first {
                println!();
            }
            first = false;
            print!("{}", io::write_kua(alg));
        }
    }
    Ok(0)
}

fn audit_cmd(
    path: &Path,
    function: Option<&Path>,
    literal: bool,
    max_subset: Option<usize>,
) -> Result<i32, KuError> {
    let alg = match load_algebra(path)? {
        Ok(alg) => alg,
        Err(code) => return Ok(code),
    };
    let f = match function {
        Some(fpath) => load_function(fpath, &alg)?,
        None => KUFunction::identity(alg),
    };
    let report = audit_propositions(&f, &AuditConfig { max_subset });
    for entry in report.entries() {
        let verdict = if entry.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{:<20} {:<10} {verdict}",
            entry.claim.id(),
            entry.variant.to_string()
        );
        if entry.vacuous {
            line.push_str("  (vacuous: not meet-complete)");
        }
        if let Some(w) = &entry.witness {
            line.push_str(&format!("  witness: {}", w.detail));
        }
        println!("{line}");
    }
    let ok = if literal {
        report.all_pass()
    } else {
        report.asserted_pass()
    };
    Ok(if ok { 0 } else { 1 })
}

fn write_file(path: &Path, content: &str) -> Result<(), KuError> {
    std::fs::write(path, content).map_err(|e| KuError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })
}
