#!/usr/bin/env python3
"""Independent dB-domain link budget used to freeze regression values in
tests/unit/radio_link_test.cpp. Works from the band tables directly, never
from the library, and routes W through an explicit per-watt power trace."""
import math

BANDS = {
    "28ghz": dict(f=28.0, bw=400e6, g_bs=45.2, g_ue=15.2, fom=24.83, lna_g=20.0, lna_nf=3.0,
                  mixer=6.0, ps=10.0, lo=10.0, pa_eff=0.28, pa_g=20.0, ant=0.6, cool=0.2,
                  screen=0.5, bs_pa=30.0, ue_pa=23.0, ple=2.0),
    "142ghz": dict(f=142.0, bw=4000e6, g_bs=59.1, g_ue=29.1, fom=8.33, lna_g=20.0, lna_nf=7.0,
                   mixer=6.0, ps=10.0, lo=19.9, pa_eff=0.208, pa_g=20.0, ant=0.6, cool=0.2,
                   screen=0.5, bs_pa=30.0, ue_pa=23.0, ple=2.0),
}


def lin(db):
    return 10 ** (db / 10)


def trace(stages, p_src):
    """stages: list of (gain, W). Returns (consumed_total, p_out)."""
    p, total = p_src, p_src
    for g, w in stages:
        out = g * p
        total += w * out - p
        p = out
    return total, p


def noise_oracle(stages):
    """stages: list of (gain, F). Propagate kTB-normalised noise."""
    n, g_tot = 1.0, 1.0
    for g, f in stages:
        n = g * (n + (f - 1))
        g_tot *= g
    return n / g_tot


def link(band, d, downlink, mode):
    b = BANDS[band]
    pl = 32.4 + 20 * math.log10(b["f"]) + 10 * b["ple"] * math.log10(d)
    ch_db = min(0.0, b["g_bs"] + b["g_ue"] - pl)
    pa_dbm = b["bs_pa"] if downlink else b["ue_pa"]
    rx_dbm = pa_dbm - b["ps"] + 10 * math.log10(b["ant"]) + ch_db
    nf = 10 * math.log10(noise_oracle([
        (b["ant"], 1 / b["ant"]), (lin(b["lna_g"]), lin(b["lna_nf"])),
        (lin(-b["ps"]), lin(b["ps"])), (lin(-b["mixer"]), lin(b["mixer"]))]))
    noise_dbm = -174 + 10 * math.log10(b["bw"]) + nf
    snr = lin(rx_dbm - noise_dbm)
    rate = b["bw"] * math.log2(1 + snr)
    pa_w = lin(pa_dbm) * 1e-3
    g_pa = lin(b["pa_g"])
    full = [(g_pa, 1 / b["pa_eff"]), (lin(-b["ps"]), lin(b["ps"])), (b["ant"], 1 / b["ant"]),
            (lin(ch_db), lin(-ch_db)),
            (b["ant"], 1 / b["ant"]), (lin(-b["ps"]), lin(b["ps"])),
            (lin(-b["mixer"]), lin(b["mixer"]))]
    consumed, p_out = trace(full, pa_w / g_pa)
    w = consumed / p_out
    lo = lin(b["lo"]) * 1e-3
    lna = lin(b["lna_g"]) / (b["fom"] * (lin(b["lna_nf"]) - 1)) * 1e-3
    bs_fixed = lo + (0 if downlink else lna)
    ue_fixed = lo + b["screen"] + (lna if downlink else 0)
    bs_path = consumed if downlink else 0
    non_path = bs_fixed + ue_fixed + b["cool"] * (bs_fixed + bs_path)
    cef = rate / (consumed + (non_path if mode == "total" else 0))
    return dict(pl=pl, nf=nf, snr=snr, rate=rate, w=w, p_out=p_out, consumed=consumed,
                non_path=non_path, cef=cef)


if __name__ == "__main__":
    for band in BANDS:
        for dl in (True, False):
            for mode in ("path", "total"):
                r = link(band, 100.0, dl, mode)
                print(band, "down" if dl else "up", mode,
                      " ".join(f"{k}={v:.12e}" for k, v in r.items()))
    # Receiver noise figure with a 2.0 LNA noise factor (not the preset).
    print("nf_lna2", 10 * math.log10(noise_oracle([(0.6, 1 / 0.6), (100, 2.0), (0.1, 10.0),
                                                    (lin(-6), lin(6))])))
    print("nf_no_lna", 10 * math.log10(noise_oracle([(0.6, 1 / 0.6), (0.1, 10.0),
                                                       (lin(-6), lin(6))])))
