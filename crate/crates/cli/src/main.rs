use std::panic::{self, AssertUnwindSafe};

use clap::Parser;
use cliph_cli::commands::{execute, Cli};

// Exit codes: 0 success, 1 usage, 2 bad input, 3 internal assertion.
fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = i32::from(e.use_stderr());
            let _ = e.print();
            return code;
        }
    };
    panic::set_hook(Box::new(|_| {}));
    match panic::catch_unwind(AssertUnwindSafe(|| execute(&cli))) {
        Ok(Ok(())) => 0,
        Ok(Err(err)) => {
            eprintln!("error: {err}");
            2
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| (*s).to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            eprintln!("internal error: {msg}");
            3
        }
    }
}
