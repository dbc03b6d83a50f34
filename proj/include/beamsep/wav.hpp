#ifndef BEAMSEP_WAV_HPP
#define BEAMSEP_WAV_HPP

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "beamsep/audio.hpp"
#include "beamsep/common.hpp"

namespace beamsep {

// PCM 16-bit little-endian RIFF/WAVE only. Compressed or float formats are
// rejected. Chunks other than fmt/data are skipped.

namespace wav_detail {

inline uint32_t read_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

inline uint16_t read_u16(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<uint16_t>(b[0] | (b[1] << 8));
}

inline void write_u32(std::ostream& out, uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

inline void write_u16(std::ostream& out, uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
  out.write(b, 2);
}

}  // namespace wav_detail

/// Read a PCM-16 WAV file. Returns one TimeSignal per channel.
inline std::vector<TimeSignal> read_wav(const std::string& path) {
  using namespace wav_detail;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open WAV file: " + path);

  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0)
    throw data_error("not a RIFF file: " + path);
  read_u32(in);  // riff size
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0)
    throw data_error("not a WAVE file: " + path);

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  bool have_fmt = false;
  std::vector<int16_t> raw;

  while (in.read(tag, 4)) {
    uint32_t chunk_size = read_u32(in);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      format = read_u16(in);
      channels = read_u16(in);
      sample_rate = read_u32(in);
      read_u32(in);  // byte rate
      read_u16(in);  // block align
      bits = read_u16(in);
      if (chunk_size > 16) in.seekg(chunk_size - 16, std::ios::cur);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw data_error("WAV data chunk before fmt: " + path);
      raw.resize(chunk_size / 2);
      in.read(reinterpret_cast<char*>(raw.data()), chunk_size / 2 * 2);
      if (!in) throw data_error("truncated WAV data: " + path);
      break;
    } else {
      in.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
    }
  }

  if (!have_fmt) throw data_error("WAV file has no fmt chunk: " + path);
  if (format != 1) throw data_error("unsupported WAV format (PCM only): " + path);
  if (bits != 16) throw data_error("unsupported WAV bit depth (16-bit only): " + path);
  if (channels == 0 || raw.empty()) throw data_error("empty WAV file: " + path);

  const size_t frames = raw.size() / channels;
  std::vector<TimeSignal> out(channels);
  for (uint16_t c = 0; c < channels; ++c) {
    out[c].sample_rate = static_cast<int>(sample_rate);
    out[c].samples.resize(frames);
    for (size_t i = 0; i < frames; ++i)
      out[c].samples[i] = raw[i * channels + c] / 32768.0;
  }
  return out;
}

/// Write interleaved PCM-16 WAV. All channels must share length and rate.
inline void write_wav(const std::string& path, const std::vector<TimeSignal>& channels) {
  using namespace wav_detail;
  if (channels.empty()) throw std::invalid_argument("write_wav: no channels");
  const size_t frames = channels[0].samples.size();
  const int rate = channels[0].sample_rate;
  for (const auto& ch : channels)
    if (ch.samples.size() != frames || ch.sample_rate != rate)
      throw std::invalid_argument("write_wav: channel length/rate mismatch");

  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot open WAV file for writing: " + path);

  const uint16_t n_ch = static_cast<uint16_t>(channels.size());
  const uint32_t data_bytes = static_cast<uint32_t>(frames * n_ch * 2);

  out.write("RIFF", 4);
  write_u32(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_u32(out, 16);
  write_u16(out, 1);  // PCM
  write_u16(out, n_ch);
  write_u32(out, static_cast<uint32_t>(rate));
  write_u32(out, static_cast<uint32_t>(rate) * n_ch * 2);
  write_u16(out, n_ch * 2);
  write_u16(out, 16);
  out.write("data", 4);
  write_u32(out, data_bytes);

  for (size_t i = 0; i < frames; ++i) {
    for (uint16_t c = 0; c < n_ch; ++c) {
      double s = std::clamp(channels[c].samples[i], -1.0, 1.0);
      int16_t q = static_cast<int16_t>(std::lround(s * 32767.0));
      char b[2] = {static_cast<char>(q & 0xff), static_cast<char>((q >> 8) & 0xff)};
      out.write(b, 2);
    }
  }
  if (!out) throw data_error("failed writing WAV file: " + path);
}

inline void write_wav(const std::string& path, const TimeSignal& mono) {
  write_wav(path, std::vector<TimeSignal>{mono});
}

}  // namespace beamsep

#endif  // BEAMSEP_WAV_HPP
