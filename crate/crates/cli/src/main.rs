use clap::Parser;

use catalan_series_cli::{run, Cli, CliError};

fn main() {
    // clap itself exits with code 2 on malformed flags.
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => println!("{output}"),
        Err(err @ CliError::Usage(_)) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
        Err(err @ CliError::Domain(_)) => {
            eprintln!("error: {err}");
            std::process::exit(3);
        }
    }
}
