// Copyright 2026 the Peelspiral Authors
// SPDX-License-Identifier: Apache-2.0

fn main() -> std::process::ExitCode {
    peelspiral::cli::main()
}
