"""
snn_network.v
=============

Verilog for the register file and the 2x3 network. The register map comment
block is rendered from ``snnchip.core.regfile.register_map`` so the two can
never disagree.
"""

from string import Template

from ..core.regfile import register_map

FILENAME = "snn_network.v"

SNN_NETWORK_V = Template("""\
// snn_network.v
// Register file plus two layers of three LIF neurons. Layer 1 is driven by
// the external currents; layer 2 by the weighted layer-1 spikes of the
// previous cycle. Both layers share one threshold, leak and refractory period.

module snn_network (
    input  wire        clk,
    input  wire        rst,
    input  wire        wr_en,
    input  wire [7:0]  wr_addr,
    input  wire [7:0]  wr_data,
    input  wire [23:0] input_currents,
    output wire [2:0]  layer1_spikes,
    output wire [2:0]  layer2_spikes
);

    // Register map (write-only, one byte per address)
$register_map

    reg [7:0] regs [0:11];

    integer r;
    always @(posedge clk) begin
        if (rst) begin
            for (r = 0; r < 12; r = r + 1) begin
                regs[r] <= 8'd0;
            end
        end else if (wr_en && (wr_addr < 8'd12)) begin
            regs[wr_addr] <= wr_data;
        end
    end

    // w[i][j] at weights_flat[(i*3 + j)*8 +: 8]
    wire [71:0] weights_flat;
    wire [7:0]  threshold         = regs[9];
    wire [7:0]  leak              = regs[10];
    wire [7:0]  refractory_period = regs[11];

    genvar g;
    generate
        for (g = 0; g < 9; g = g + 1) begin : pack_weights
            assign weights_flat[g*8 +: 8] = regs[g];
        end
    endgenerate

    genvar n1;
    generate
        for (n1 = 0; n1 < 3; n1 = n1 + 1) begin : layer1
            lif_neuron neuron (
                .clk(clk),
                .rst(rst),
                .current(input_currents[n1*8 +: 8]),
                .threshold(threshold),
                .leak(leak),
                .refractory_period(refractory_period),
                .membrane(),
                .refractory_count(),
                .spike(layer1_spikes[n1])
            );
        end
    endgenerate

    // layer1_spikes are the registered spike outputs, so layer 2 sees the
    // spikes of the previous cycle.
    genvar n2;
    generate
        for (n2 = 0; n2 < 3; n2 = n2 + 1) begin : layer2
            wire [9:0] weighted_sum =
                  (layer1_spikes[0] ? {2'b00, weights_flat[(n2*3 + 0)*8 +: 8]} : 10'd0)
                + (layer1_spikes[1] ? {2'b00, weights_flat[(n2*3 + 1)*8 +: 8]} : 10'd0)
                + (layer1_spikes[2] ? {2'b00, weights_flat[(n2*3 + 2)*8 +: 8]} : 10'd0);
            wire [7:0] l2_current = (weighted_sum > 10'd255) ? 8'hFF : weighted_sum[7:0];

            lif_neuron neuron (
                .clk(clk),
                .rst(rst),
                .current(l2_current),
                .threshold(threshold),
                .leak(leak),
                .refractory_period(refractory_period),
                .membrane(),
                .refractory_count(),
                .spike(layer2_spikes[n2])
            );
        end
    endgenerate

endmodule
""")


def register_map_comment() -> str:
    """One ``//   0xAA  label`` line per register, in address order."""
    return "\n".join(f"    //   0x{addr:02X}  {label}" for addr, label in register_map())


def render() -> str:
    return SNN_NETWORK_V.substitute(register_map=register_map_comment())
