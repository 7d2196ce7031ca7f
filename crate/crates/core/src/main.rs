// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

fn main() {
    let code = rosettes::cli::run_command(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
