#pragma once

// Diagram rendering, presentation only. The single contract: the strand
// count visible in each gap row equals the slice count there (and hence the
// profile at extremal gaps).
//
// ASCII rows read top-down as the diagram does, so the word's last event is
// printed first. Tracks sit at every second column; strands are drawn at
// their per-slice positions, so tracks to the right of an extremum shift
// between rows.

#include <algorithm>
#include <string>
#include <vector>

#include "trunkforge/morse.hpp"

namespace trunkforge {

namespace detail {

inline void put(std::string& line, int col, char c) {
  if (static_cast<std::size_t>(col) >= line.size()) line.resize(col + 1, ' ');
  line[col] = c;
}

inline std::string bars(int count, int skip_from = -1, int skip_n = 0) {
  std::string line;
  for (int p = 1; p <= count; ++p) {
    if (skip_from >= 0 && p >= skip_from && p < skip_from + skip_n) continue;
    put(line, 2 * (p - 1), '|');
  }
  return line;
}

}  // namespace detail

inline std::string render_ascii(const MorseWord& w) {
  const std::vector<Event>& ev = w.events();
  const std::vector<int> counts = slice_counts(w);
  std::vector<std::string> lines;

  for (int t = static_cast<int>(ev.size()) - 1; t >= 0; --t) {
    const Event& e = ev[t];
    const int below = counts[t];
    const int above = counts[t + 1];
    const int col = 2 * (e.pos - 1);
    switch (e.kind) {
      case EventKind::Cup: {  // drawn at the upper slice, where its pair lives
        std::string line = detail::bars(above, e.pos, 2);
        detail::put(line, col, '\\');
        detail::put(line, col + 1, '_');
        detail::put(line, col + 2, '/');
        lines.push_back(line);
        break;
      }
      case EventKind::Cap: {  // drawn at the lower slice
        std::string line = detail::bars(below, e.pos, 2);
        detail::put(line, col, '/');
        detail::put(line, col + 1, '-');
        detail::put(line, col + 2, '\\');
        lines.push_back(line);
        break;
      }
      default: {  // crossing: three lines, over strand unbroken in the middle
        std::string top = detail::bars(below, e.pos, 2);
        detail::put(top, col, '\\');
        detail::put(top, col + 2, '/');
        std::string mid = detail::bars(below, e.pos, 2);
        detail::put(mid, col + 1, e.kind == EventKind::CrossPos ? '/' : '\\');
        std::string bot = detail::bars(below, e.pos, 2);
        detail::put(bot, col, '/');
        detail::put(bot, col + 2, '\\');
        lines.push_back(top);
        lines.push_back(mid);
        lines.push_back(bot);
        break;
      }
    }
    if (t > 0) lines.push_back(detail::bars(counts[t]));
  }

  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

inline std::string render_svg(const MorseWord& w) {
  const std::vector<Event>& ev = w.events();
  const std::vector<int> counts = slice_counts(w);
  const int n = static_cast<int>(ev.size());

  const double pitch = 24.0, event_h = 24.0, gap_h = 14.0, margin = 12.0;
  auto x = [&](int pos) { return margin + pitch * (pos - 1); };

  int max_count = 0;
  for (int c : counts) max_count = std::max(max_count, c);
  const double width_px = 2 * margin + pitch * (max_count > 1 ? max_count - 1 : 0);
  const double height_px = n * event_h + (n - 1) * gap_h;

  std::string body;
  auto line = [&](double x1, double y1, double x2, double y2) {
    body += "  <line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) +
            "\" x2=\"" + std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\"/>\n";
  };
  auto curve = [&](double x1, double y1, double cx1, double cy1, double cx2, double cy2,
                   double x2, double y2) {
    body += "  <path d=\"M " + std::to_string(x1) + ' ' + std::to_string(y1) + " C " +
            std::to_string(cx1) + ' ' + std::to_string(cy1) + ", " + std::to_string(cx2) + ' ' +
            std::to_string(cy2) + ", " + std::to_string(x2) + ' ' + std::to_string(y2) +
            "\"/>\n";
  };

  double y = 0.0;
  for (int t = n - 1; t >= 0; --t) {
    const Event& e = ev[t];
    const int below = counts[t];
    const double y0 = y, y1 = y + event_h;
    const int i = e.pos;

    // pass-through strands, connecting lower position q to its upper position
    for (int q = 1; q <= below; ++q) {
      if (e.kind != EventKind::Cup && q >= i && q <= i + 1) continue;  // consumed by the event
      int up = q;
      if (e.kind == EventKind::Cup && q >= i) up = q + 2;
      if (e.kind == EventKind::Cap && q > i + 1) up = q - 2;
      line(x(q), y1, x(up), y0);
    }
    switch (e.kind) {
      case EventKind::Cup:
        curve(x(i), y0, x(i), y1, x(i + 1), y1, x(i + 1), y0);
        break;
      case EventKind::Cap:
        curve(x(i), y1, x(i), y0, x(i + 1), y0, x(i + 1), y1);
        break;
      default: {
        const bool left_over = e.kind == EventKind::CrossPos;  // strand at i passes over
        const double xm = (x(i) + x(i + 1)) / 2.0, ym = (y0 + y1) / 2.0;
        const double dx = 0.22 * pitch, dy = 0.22 * event_h;
        if (left_over) {
          line(x(i + 1), y1, xm + dx, ym + dy);  // under, broken at the middle
          line(xm - dx, ym - dy, x(i), y0);
          line(x(i), y1, x(i + 1), y0);  // over
        } else {
          line(x(i), y1, xm - dx, ym + dy);
          line(xm + dx, ym - dy, x(i + 1), y0);
          line(x(i + 1), y1, x(i), y0);
        }
        break;
      }
    }
    y = y1;
    if (t > 0) {
      for (int q = 1; q <= counts[t]; ++q) line(x(q), y + gap_h, x(q), y);
      y += gap_h;
    }
  }

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width_px) +
         "\" height=\"" + std::to_string(height_px) + "\" viewBox=\"0 0 " +
         std::to_string(width_px) + ' ' + std::to_string(height_px) + "\">\n";
  out += "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
  out += body;
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace trunkforge
