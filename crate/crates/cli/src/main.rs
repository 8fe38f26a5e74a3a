fn main() {
    let (report, format) = sdalg_cli::run_command(std::env::args());
    print!("{}", report.render(format));
    std::process::exit(report.exit_status);
}
