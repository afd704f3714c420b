use std::process::ExitCode;

use clap::Parser;
use singeq_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    print!("{}", report.table);
    let dir = cli.out.clone().unwrap_or_else(|| ".".into());
    let path = dir.join(format!("{}.json", report.command));
    if let Err(e) = std::fs::create_dir_all(&dir).and_then(|_| std::fs::write(&path, report.json()))
    {
        eprintln!("error: writing {}: {e}", path.display());
        return ExitCode::from(1);
    }
    ExitCode::from(report.exit as u8)
}
