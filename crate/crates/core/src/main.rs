use clap::Parser;
use quadratize::cli::{run, Cli};

fn main() {
    env_logger::init();
    let cli = Cli::parse();
    let code = run(cli, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
