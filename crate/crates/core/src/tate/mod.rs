//! Windows of Tate resolutions, their cohomology tables, pushforward along a
//! linear embedding, and descent to a smaller projective space.

mod table;

pub use table::{CohomologyRecord, CohomologyTable, StrayGenerator};

use crate::bgg::{bgg_r, homology_dim, is_linear};
use crate::efree::{FreeEModule, GradedMap};
use crate::eres::{regularity_of_coker, syzygies, Regularity, RegularityOptions, ResolutionWindow};
use crate::error::{Error, Result};
use crate::extalg::{AlgebraContext, ExtElement, ExtMonomial};
use crate::linalg::Subspace;
use crate::smod::{regularity_s, SPresentation, SlicedModule};

/// Positions `lo..=hi` of a Tate resolution, with `maps[k - lo]: T^k -> T^{k+1}`.
#[derive(Clone, Debug)]
pub struct TateWindow {
    ctx: AlgebraContext,
    lo: i32,
    start: i32,
    modules: Vec<FreeEModule>,
    maps: Vec<GradedMap>,
}

impl TateWindow {
    /// Keeps positions `lo..=hi` of a chain built on `first..`.
    fn trimmed(ctx: AlgebraContext, first: i32, start: i32, modules: Vec<FreeEModule>, maps: Vec<GradedMap>, lo: i32, hi: i32) -> Self {
        let a = (lo - first) as usize;
        let b = (hi - first) as usize;
        TateWindow { ctx, lo, start, modules: modules[a..=b].to_vec(), maps: maps[a..b].to_vec() }
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.modules.len() as i32 - 1
    }

    /// Position where the construction began.
    pub fn start(&self) -> i32 {
        self.start
    }

    pub fn module(&self, k: i32) -> &FreeEModule {
        &self.modules[(k - self.lo) as usize]
    }

    /// `d^k: T^k -> T^{k+1}`, for `lo <= k < hi`.
    pub fn map(&self, k: i32) -> &GradedMap {
        &self.maps[(k - self.lo) as usize]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// Homology dimension at an interior position.
    pub fn exactness_defect(&self, k: i32) -> Result<usize> {
        if k <= self.lo || k >= self.hi() {
            return Err(Error::OutOfWindow { position: k, lo: self.lo + 1, hi: self.hi() - 1 });
        }
        Ok(homology_dim(self.map(k - 1), self.map(k)))
    }

    /// Regularity of `coker (d^k)^dual`, which should be `-k`.
    ///
    /// The minimal resolution of that cokernel is the dual of `T^{>=k}`, which
    /// is linear from the start position on, so the stabilization window is
    /// widened to reach past it.
    pub fn dual_cokernel_regularity(&self, k: i32, opts: RegularityOptions) -> Result<Regularity> {
        if k < self.lo || k >= self.hi() {
            return Err(Error::OutOfWindow { position: k, lo: self.lo, hi: self.hi() - 1 });
        }
        let base = opts.window.unwrap_or(self.ctx.vars() + 1);
        let window = base.max((self.start - k).max(0) as usize + 2);
        regularity_of_coker(&self.map(k).dual(), RegularityOptions { window: Some(window), ..opts })
    }

    /// A generator of `T^k` in degree `j` contributes to `gamma_{k-j, j}`.
    pub fn cohomology_table(&self) -> CohomologyTable {
        let mut t = CohomologyTable::empty(self.ctx.n(), self.lo, self.hi());
        for (idx, m) in self.modules.iter().enumerate() {
            let k = self.lo + idx as i32;
            let mut degs = m.degrees().to_vec();
            degs.sort_unstable();
            for chunk in degs.chunk_by(|a, b| a == b) {
                t.add_generators(k, chunk[0], chunk.len());
            }
        }
        t
    }
}

/// Extends `d: T^k -> T^{k+1}` to the left down to position `lo`, prepending
/// the syzygy maps. Returns the new first position.
fn extend_left(modules: &mut Vec<FreeEModule>, maps: &mut Vec<GradedMap>, mut first: i32, lo: i32) -> i32 {
    while first > lo {
        let syz = syzygies(&maps[0]);
        modules.insert(0, syz.source().clone());
        maps.insert(0, syz);
        first -= 1;
    }
    first
}

fn zero_window(ctx: AlgebraContext, lo: i32, hi: i32, start: i32) -> TateWindow {
    let modules: Vec<FreeEModule> = (lo..=hi).map(|_| FreeEModule::zero(&ctx)).collect();
    let maps = modules.windows(2).map(|w| GradedMap::zero(w[0].clone(), w[1].clone())).collect();
    TateWindow { ctx, lo, start, modules, maps }
}

/// The start position `reg_S(m) + 1`, past which `R(M_{>=k})` agrees with the
/// Tate resolution and the slices are the global sections.
pub fn default_start(m: &SlicedModule) -> Result<i32> {
    Ok(regularity_s(m)? + 1)
}

/// Window `[lo, hi]` of the Tate resolution of the sheaf of `m`. Positions
/// from the start `k0` on are `R(M_{>=k0})`; the rest are successive syzygies.
pub fn tate_window(m: &SlicedModule, lo: i32, hi: i32, start: Option<i32>) -> Result<TateWindow> {
    if lo > hi {
        return Err(Error::Invalid(format!("empty window [{lo}, {hi}]")));
    }
    let ctx = AlgebraContext::new(m.ring().n(), *m.ring().field())?;
    let k0 = match start {
        Some(k) => k.max(m.lo()),
        None => match default_start(m) {
            Ok(k) => k,
            Err(Error::ZeroModule(_)) => return Ok(zero_window(ctx, lo, hi, lo)),
            Err(e) => return Err(e),
        },
    };
    let top = hi.max(k0 + 1);
    if top > m.hi() {
        return Err(Error::WindowTooSmall { what: format!("Tate window starting at {k0}"), required: top, available: m.hi() });
    }
    let c = bgg_r(&m.truncate(k0)?.up_to(top)?)?;
    let mut modules: Vec<FreeEModule> = (k0..=top).map(|k| c.module(k).clone()).collect();
    let mut maps: Vec<GradedMap> = c.maps().to_vec();
    let first = extend_left(&mut modules, &mut maps, k0, lo);
    Ok(TateWindow::trimmed(ctx, first, k0, modules, maps, lo, hi))
}

/// Slices a presentation far enough to find its start and build `[lo, hi]`.
pub fn slice_for_tate(pres: &SPresentation, hi: i32, start: Option<i32>) -> Result<(SlicedModule, Option<i32>)> {
    let n = pres.ring().n() as i32;
    let Some(&lo_s) = pres.rowdegs().iter().min() else {
        return Ok((SlicedModule::slice(pres, 0, hi.max(1))?, None));
    };
    let gen_top = *pres.rowdegs().iter().max().unwrap();
    let mut hi_s = hi.max(gen_top + n + 3).max(lo_s + 1);
    if let Some(k) = start {
        let m = SlicedModule::slice(pres, lo_s, hi_s.max(k + 1))?;
        return Ok((m, Some(k)));
    }
    loop {
        let m = SlicedModule::slice(pres, lo_s, hi_s)?;
        match default_start(&m) {
            // The quiet rows above the regularity put `k + 1` inside the window.
            Ok(k) => return Ok((m, Some(k))),
            Err(Error::WindowTooSmall { required, .. }) => hi_s = required.max(hi_s + 1),
            Err(Error::ZeroModule(_)) => return Ok((m, None)),
            Err(e) => return Err(e),
        }
    }
}

/// Tate window of the module presented by `pres`.
pub fn tate_window_of(pres: &SPresentation, lo: i32, hi: i32, start: Option<i32>) -> Result<TateWindow> {
    let (m, k0) = slice_for_tate(pres, hi, start)?;
    match k0 {
        Some(k) => tate_window(&m, lo, hi, Some(k)),
        None => tate_window(&m, lo, hi, None),
    }
}

/// Regularity of `coker phi^dual`, the quantity defining `X^0`. Stops early
/// once the top row is known to be below zero.
pub fn coker_dual_regularity(phi: &GradedMap, opts: RegularityOptions) -> Result<Regularity> {
    let opts = RegularityOptions { stop_below: Some(opts.stop_below.unwrap_or(0)), ..opts };
    regularity_of_coker(&phi.dual(), opts)
}

fn unit_entry(phi: &GradedMap) -> Option<(usize, usize)> {
    for (r, row) in phi.entries().iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            if !e.is_zero() && e.degree() == 0 {
                return Some((r, c));
            }
        }
    }
    None
}

/// The Tate resolution with `phi` as `d^0`: the right part is the dual of the
/// minimal resolution of `coker phi^dual`, the left part the syzygies of `phi`.
pub fn tate_from_point(phi: &GradedMap, lo: i32, hi: i32, opts: RegularityOptions) -> Result<TateWindow> {
    if lo > hi {
        return Err(Error::Invalid(format!("empty window [{lo}, {hi}]")));
    }
    if let Some((row, col)) = unit_entry(phi) {
        return Err(Error::NotMinimal { row, col });
    }
    let reg = coker_dual_regularity(phi, opts)?;
    if reg.value != 0 || !reg.certified || reg.below_floor {
        return Err(Error::NotInX0 { regularity: reg.value, certified: reg.certified && !reg.below_floor });
    }
    let ctx = phi.ctx().clone();
    let top = hi.max(1);
    let mut res = ResolutionWindow::of_coker(&phi.dual());
    res.extend_to(top as usize + 1);
    let mut modules = Vec::new();
    let mut maps = Vec::new();
    for j in 0..=top as usize {
        if j < res.len() {
            modules.push(res.free(j).dual());
        } else {
            modules.push(FreeEModule::zero(&ctx));
        }
        if j > 0 {
            let map = if j - 1 < res.maps().len() {
                res.map(j - 1).dual()
            } else {
                GradedMap::zero(modules[j - 1].clone(), modules[j].clone())
            };
            maps.push(map);
        }
    }
    let first = extend_left(&mut modules, &mut maps, 0, lo);
    Ok(TateWindow::trimmed(ctx, first, 0, modules, maps, lo, hi))
}

/// Compares the tables of `m` and of its pushforward (one more variable
/// acting by zero) on `[lo, hi]`, and checks that the pushed-forward
/// differentials from the start on only use the old variables.
pub fn pushforward_check(m: &SlicedModule, lo: i32, hi: i32, start: Option<i32>) -> Result<bool> {
    let k0 = match start {
        Some(k) => k,
        None => match default_start(m) {
            Ok(k) => k,
            Err(Error::ZeroModule(_)) => return Ok(true),
            Err(e) => return Err(e),
        },
    };
    let before = tate_window(m, lo, hi, Some(k0))?;
    let wide = m.extend_variable();
    let after = tate_window(&wide, lo, hi, Some(k0))?;
    let n = m.ring().n();
    let old_only = (after.start().max(lo)..after.hi())
        .flat_map(|k| after.map(k).entries().iter().flatten())
        .all(|e| e.max_var().is_none_or(|v| v <= n));
    Ok(old_only && before.cohomology_table().padded(n + 1) == after.cohomology_table())
}

/// Descent along the first nonzero linear differential at a position past
/// `reg_upper`: the span of its entries has dimension `n0 + 1`, and the sheaf
/// lives on the corresponding `P^{n0}`.
pub fn descent(t: &TateWindow, reg_upper: i32) -> Result<(usize, Vec<ExtElement>)> {
    let from = (reg_upper + 1).max(t.lo());
    let field = *t.ctx().field();
    let vars = t.ctx().vars();
    for k in from..t.hi() {
        let d = t.map(k);
        if d.is_zero() || !is_linear(d) {
            continue;
        }
        let mut span = Subspace::new(vars);
        for e in d.entries().iter().flatten() {
            let v: Vec<u32> = (0..vars).map(|i| e.coefficient(ExtMonomial::var(i))).collect();
            span.insert(&v, &field);
        }
        let basis = span
            .basis()
            .iter()
            .map(|v| {
                let terms = v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (ExtMonomial::var(i), c));
                ExtElement::from_terms(&field, -1, terms)
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok((span.dim() - 1, basis));
    }
    Err(Error::NoLinearDifferential { from })
}
