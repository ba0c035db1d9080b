//! Module expressions: `eval(m,a)`, `tensor(E,E)`, `eself(E)`, `weyl(pi)`,
//! `dual(E)`.

use qloop_core::dpoly::DrinfeldPoly;
use qloop_core::error::{Error, Result};
use qloop_core::parse::Cursor;
use qloop_core::qnum::QParam;
use qloop_core::repcore::Module;
use qloop_core::selfext::graded_twist;
use qloop_core::sl2eval::{eval_module, EvalModuleSpec};
use qloop_core::weylalg::local_weyl;

pub fn build(src: &str, q: &QParam) -> Result<Module> {
    let mut c = Cursor::new(src);
    let m = expr(&mut c, q)?;
    c.finish()?;
    Ok(m)
}

fn expr(c: &mut Cursor<'_>, q: &QParam) -> Result<Module> {
    let at = c.pos();
    let name = c.ident()?;
    c.expect('(')?;
    let module = match name {
        "eval" => {
            let m = c.integer()?;
            c.expect(',')?;
            let a = c.scalar(q)?;
            let m = u32::try_from(m).or_else(|_| c.error("m must be nonnegative"))?;
            eval_module(&EvalModuleSpec::new(m, a, q.clone())?)
        }
        "tensor" => {
            let left = expr(c, q)?;
            c.expect(',')?;
            let right = expr(c, q)?;
            left.tensor(&right)?
        }
        "eself" => graded_twist(&expr(c, q)?),
        "dual" => expr(c, q)?.dual(),
        "weyl" => local_weyl(&DrinfeldPoly::parse_from(c, q)?, q)?,
        _ => return Err(Error::Parse { pos: at, msg: format!("unknown constructor '{name}'") }),
    };
    c.expect(')')?;
    Ok(module)
}
