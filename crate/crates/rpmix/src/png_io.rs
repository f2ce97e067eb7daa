use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;

use rpmix_core::RgbImage;

use crate::{Error, Result};

/// Writes an 8-bit RGB, non-interlaced PNG without alpha.
pub fn write_png(img: &RgbImage, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let png_err = |source| Error::Png {
        path: path.to_path_buf(),
        source,
    };
    let mut encoder = png::Encoder::new(BufWriter::new(file), img.width() as u32, img.height() as u32);
    encoder.set_color(png::ColorType::Rgb);
    encoder.set_depth(png::BitDepth::Eight);
    let mut writer = encoder.write_header().map_err(png_err)?;
    writer.write_image_data(img.as_bytes()).map_err(png_err)?;
    writer.finish().map_err(png_err)
}

/// Reads back a PNG written by [`write_png`].
pub fn read_png(path: &Path) -> Result<RgbImage> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let decode_err = |source| Error::PngDecode {
        path: path.to_path_buf(),
        source,
    };
    let mut reader = png::Decoder::new(BufReader::new(file))
        .read_info()
        .map_err(decode_err)?;
    let (color, depth) = reader.output_color_type();
    if color != png::ColorType::Rgb || depth != png::BitDepth::Eight {
        return Err(Error::UnsupportedPng {
            path: path.to_path_buf(),
            reason: format!("{color:?} at {depth:?}"),
        });
    }
    let size = reader.output_buffer_size().ok_or_else(|| Error::UnsupportedPng {
        path: path.to_path_buf(),
        reason: "image too large".into(),
    })?;
    let mut buf = vec![0; size];
    let info = reader.next_frame(&mut buf).map_err(decode_err)?;
    if info.width != info.height {
        return Err(Error::UnsupportedPng {
            path: path.to_path_buf(),
            reason: format!("{}x{} is not square", info.width, info.height),
        });
    }
    buf.truncate(info.buffer_size());
    Ok(RgbImage::new(info.width as usize, buf)?)
}
