use discdeg_core::formulas::symbolic_degrees;

use crate::Failure;

/// One `name = polynomial` line per `deg_i`, then `deg_var`, in `d1..dc`.
pub fn run_symbolic(c: usize, ambient_dim: usize) -> Result<String, Failure> {
    let sym = symbolic_degrees(c, ambient_dim)?;
    let mut out = String::new();
    for (i, poly) in sym.deg_i.iter().enumerate() {
        out.push_str(&format!("deg_{} = {poly}\n", i + 1));
    }
    out.push_str(&format!("deg_var = {}\n", sym.deg_var));
    Ok(out)
}
