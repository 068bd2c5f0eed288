# Generated by Django 4.2.11 on 2024-06-01 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='CensusRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('q', models.PositiveIntegerField()),
                ('modulus', models.CharField(max_length=32)),
                ('group', models.CharField(choices=[('pgl3', 'pgl3'), ('sym7', 'sym7')], default='pgl3', max_length=8)),
                ('shards', models.PositiveIntegerField(default=1)),
                ('complete', models.BooleanField(default=True)),
                ('checksum', models.CharField(max_length=64)),
                ('counts', models.JSONField(default=dict)),
                ('representatives', models.JSONField(default=dict)),
                ('total', models.PositiveBigIntegerField(default=0)),
                ('runtime_seconds', models.FloatField(default=0.0)),
                ('output_path', models.CharField(blank=True, max_length=255)),
                ('created', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ['-created', '-id'],
            },
        ),
    ]
