#include "cds/size_tree.hpp"

#include "json.hpp"

namespace cds {

namespace {

nlohmann::json to_json_value(const size_tree& t)
{
    nlohmann::json j;
    j["name"] = t.name;
    j["size"] = t.total();
    j["self"] = t.self_bytes;
    if (!t.children.empty()) {
        auto& arr = j["children"] = nlohmann::json::array();
        for (const auto& c : t.children) arr.push_back(to_json_value(c));
    }
    return j;
}

std::string html_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
        }
    }
    return out;
}

const char* sunburst_script = R"JS(
(function () {
  var data = JSON.parse(document.getElementById('size-data').textContent);
  var svg = document.getElementById('chart');
  var info = document.getElementById('info');
  var NS = 'http://www.w3.org/2000/svg';
  var R = 280, CX = 300, CY = 300;
  var palette = ['#4e79a7','#f28e2b','#e15759','#76b7b2','#59a14f','#edc948','#b07aa1','#ff9da7','#9c755f','#bab0ac'];
  function depthOf(n) { var d = 0; (n.children || []).forEach(function (c) { d = Math.max(d, depthOf(c)); }); return d + 1; }
  function fmt(b) { if (b >= 1048576) return (b / 1048576).toFixed(2) + ' MiB'; if (b >= 1024) return (b / 1024).toFixed(2) + ' KiB'; return b + ' B'; }
  function arc(a0, a1, r0, r1) {
    if (a1 - a0 >= 2 * Math.PI - 1e-9) a1 = a0 + 2 * Math.PI - 1e-6;
    var large = (a1 - a0) > Math.PI ? 1 : 0;
    function pt(r, a) { return [CX + r * Math.sin(a), CY - r * Math.cos(a)]; }
    var p0 = pt(r1, a0), p1 = pt(r1, a1), p2 = pt(r0, a1), p3 = pt(r0, a0);
    return 'M' + p0 + 'A' + r1 + ',' + r1 + ' 0 ' + large + ' 1 ' + p1 + 'L' + p2 +
           'A' + r0 + ',' + r0 + ' 0 ' + large + ' 0 ' + p3 + 'Z';
  }
  var stack = [];
  function render(root) {
    while (svg.firstChild) svg.removeChild(svg.firstChild);
    var levels = depthOf(root), ring = R / levels;
    function draw(node, a0, a1, depth, color) {
      if (node.size === 0) return;
      var path = document.createElementNS(NS, 'path');
      path.setAttribute('d', depth === 0 ? arc(0, 2 * Math.PI, 0, ring) : arc(a0, a1, depth * ring, (depth + 1) * ring));
      path.setAttribute('fill', depth === 0 ? '#ffffff' : color);
      path.setAttribute('stroke', '#333');
      path.setAttribute('stroke-width', '0.5');
      var pct = (100 * node.size / data.size).toFixed(1);
      var title = document.createElementNS(NS, 'title');
      title.textContent = node.name + ': ' + fmt(node.size) + ' (' + pct + '% of total)';
      path.appendChild(title);
      path.addEventListener('mouseover', function () { info.textContent = title.textContent; });
      path.addEventListener('click', function (ev) {
        ev.stopPropagation();
        if (depth === 0) { if (stack.length) render(stack.pop()); }
        else if (node.children) { stack.push(root); render(node); }
      });
      svg.appendChild(path);
      var a = a0;
      (node.children || []).forEach(function (c, i) {
        var span = node.size ? (a1 - a0) * c.size / node.size : 0;
        draw(c, a, a + span, depth + 1, depth === 0 ? palette[i % palette.length] : color);
        a += span;
      });
    }
    draw(root, 0, 2 * Math.PI, 0, '#fff');
    info.textContent = root.name + ': ' + fmt(root.size);
  }
  render(data);
})();
)JS";

}  // namespace

uint64_t size_tree::total() const
{
    uint64_t t = self_bytes;
    for (const auto& c : children) t += c.total();
    return t;
}

const size_tree* size_tree::child(const std::string& child_name) const
{
    for (const auto& c : children)
        if (c.name == child_name) return &c;
    return nullptr;
}

std::string size_tree::to_json(int indent) const { return to_json_value(*this).dump(indent); }

std::string size_tree::to_html(const std::string& title) const
{
    std::string json = to_json();
    // keep the inline JSON from terminating the script element
    std::string safe;
    for (size_t i = 0; i < json.size(); ++i) {
        if (json[i] == '<') safe += "\\u003c";
        else safe += json[i];
    }
    std::string html;
    html += "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>";
    html += html_escape(title);
    html += "</title>\n<style>body{font-family:sans-serif;margin:20px}#info{margin:8px 0;height:1.4em}"
            "path{cursor:pointer}</style></head>\n<body>\n<h2>";
    html += html_escape(title);
    html += "</h2>\n<div id=\"info\"></div>\n<svg id=\"chart\" width=\"600\" height=\"600\"></svg>\n"
            "<p>Click a ring segment to zoom in, the center to zoom out.</p>\n"
            "<script type=\"application/json\" id=\"size-data\">";
    html += safe;
    html += "</script>\n<script>";
    html += sunburst_script;
    html += "</script>\n</body></html>\n";
    return html;
}

}  // namespace cds
