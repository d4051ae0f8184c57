use quantum3::cli;

fn main() {
    let report = cli::dispatch(std::env::args());
    if report.exit_code == 0 {
        println!("{}", report.output);
    } else {
        eprintln!("{}", report.output);
    }
    std::process::exit(report.exit_code);
}
