//! Binary field dumps and a plain CSV export of the point values.
//!
//! Layout, all integers and floats little-endian:
//!
//! | bytes | content |
//! |---|---|
//! | 8 | magic `AFLXDUMP` |
//! | 4 | format version (u32) |
//! | 16 | `nx`, `ny` (u64) |
//! | 48 | `x0`, `y0`, `lx`, `ly`, time, gamma (f64) |
//! | 4 + n | problem name (u32 length, UTF-8) |
//! | 4 + n | scheme name (u32 length, UTF-8) |
//! | 4 | number of arrays (u32, always 16) |
//! | 16 nx ny 8 | arrays, each row-major over cells `(i, j)` with `i` fastest |
//!
//! The arrays are the cell averages `rho, rho u, rho v, E`, then the
//! primitive `rho, u, v, p` at vertices, vertical edge midpoints and
//! horizontal edge midpoints.

use std::fmt::Write as _;

use activeflux::grid::{ConservativeArray, DofField, Mesh, NodeFamily, PrimitiveArray};
use anyhow::{bail, ensure, Context, Result};

pub const MAGIC: &[u8; 8] = b"AFLXDUMP";
pub const VERSION: u32 = 1;
const ARRAYS: u32 = 16;

#[derive(Clone, Debug, PartialEq)]
pub struct FieldDump {
    pub problem: String,
    pub scheme: String,
    pub time: f64,
    pub gamma: f64,
    pub field: DofField<f64>,
}

impl FieldDump {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mesh = &self.field.mesh;
        let n = mesh.len();
        let mut out = Vec::with_capacity(128 + 16 * 8 * n);
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        for v in [mesh.nx as u64, mesh.ny as u64] {
            out.extend_from_slice(&v.to_le_bytes());
        }
        for v in [mesh.x0, mesh.y0, mesh.lx, mesh.ly, self.time, self.gamma] {
            out.extend_from_slice(&v.to_le_bytes());
        }
        for s in [&self.problem, &self.scheme] {
            out.extend_from_slice(&(s.len() as u32).to_le_bytes());
            out.extend_from_slice(s.as_bytes());
        }
        out.extend_from_slice(&ARRAYS.to_le_bytes());
        for array in self.field.components() {
            for v in array {
                out.extend_from_slice(&v.to_le_bytes());
            }
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader { bytes, pos: 0 };
        ensure!(r.take(8)? == MAGIC, "not a field dump (bad magic)");
        let version = r.u32()?;
        ensure!(version == VERSION, "unsupported dump version {version}");
        let nx = usize::try_from(r.u64()?)?;
        let ny = usize::try_from(r.u64()?)?;
        let mut header = [0.0; 6];
        for v in &mut header {
            *v = r.f64()?;
        }
        let [x0, y0, lx, ly, time, gamma] = header;
        let problem = r.string()?;
        let scheme = r.string()?;
        let arrays = r.u32()?;
        ensure!(arrays == ARRAYS, "expected {ARRAYS} arrays, found {arrays}");
        let mesh = Mesh::new(nx, ny, [x0, y0], [lx, ly]).context("dump header holds an invalid mesh")?;
        let n = mesh.len();
        let expected = r.pos + ARRAYS as usize * n * 8;
        if bytes.len() != expected {
            bail!("dump holds {} bytes, header implies {expected}", bytes.len());
        }
        let mut next = || (0..n).map(|_| r.f64().expect("length checked")).collect::<Vec<f64>>();
        let avg = ConservativeArray { rho: next(), mx: next(), my: next(), e: next() };
        let mut prim = || PrimitiveArray { rho: next(), u: next(), v: next(), p: next() };
        let (vert, evert, ehorz) = (prim(), prim(), prim());
        let field = DofField { mesh, avg, vert, evert, ehorz };
        Ok(Self { problem, scheme, time, gamma, field })
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(n).filter(|&e| e <= self.bytes.len());
        let end = end.with_context(|| format!("dump truncated at byte {}", self.pos))?;
        let s = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into()?))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into()?))
    }

    fn f64(&mut self) -> Result<f64> {
        Ok(f64::from_le_bytes(self.take(8)?.try_into()?))
    }

    fn string(&mut self) -> Result<String> {
        let len = self.u32()? as usize;
        Ok(String::from_utf8(self.take(len)?.to_vec()).context("name is not UTF-8")?)
    }
}

/// Every point value with its position, one node per line.
pub fn nodal_csv(field: &DofField<f64>) -> String {
    let mesh = &field.mesh;
    let mut out = String::from("family,i,j,x,y,rho,u,v,p\n");
    for family in NodeFamily::ALL {
        let name = match family {
            NodeFamily::Vertex => "vertex",
            NodeFamily::VerticalEdge => "vertical_edge",
            NodeFamily::HorizontalEdge => "horizontal_edge",
        };
        let points = field.points(family);
        for j in 0..mesh.ny {
            for i in 0..mesh.nx {
                let [x, y] = family.position(mesh, i, j);
                let w = points.get(mesh.index(i, j));
                let _ = writeln!(out, "{name},{i},{j},{x:.16e},{y:.16e},{:.16e},{:.16e},{:.16e},{:.16e}", w.rho, w.u, w.v, w.p);
            }
        }
    }
    out
}
